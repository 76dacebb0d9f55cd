from .model import DEFAULT_BITS, DEFAULT_DIM, DEFAULT_LEVELS, EncodingModel, Scheme, generate_model
from .encoding import (
    encode_graph,
    encode_record,
    encode_record_batch,
    encode_traditional,
    encode_traditional_batch,
    memory_hypervectors,
    quantize_features,
    quantize_to_levels,
    round_half_away_from_zero,
)
from .ops import bundle, classify, cosine_scores, cosine_similarity, normalize_quantize, similarity_scores
from .training import TrainedModel, accuracy, encode_dataset, encode_queries, predict, train_single_pass
