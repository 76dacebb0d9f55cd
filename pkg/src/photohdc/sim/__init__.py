from .config import (
    AcceleratorConfig,
    WireDelayResult,
    WorkloadSpec,
    dac_count,
    derive_t_dac,
    programming_dacs_per_unit,
    wire_delay_check,
)
from .schedule import (
    ScheduleStats,
    cycles_infer_per_batch,
    cycles_train_per_group,
    schedule_inference,
    schedule_training,
    training_groups,
)
from .golden import GoldenRun, GoldenStats, TileTraceEvent, export_trace, golden_tile_run
