from .search import (
    Budgets,
    Objective,
    PointEval,
    SearchResult,
    SearchSpace,
    SweepPoint,
    budget_sweep,
    default_grid,
    evaluate_point,
    exhaustive_search,
    search_threads,
)
from .emit import (
    config_label,
    report_markdown_row,
    search_markdown_table,
    search_result_to_csv,
    sweep_to_csv,
)
