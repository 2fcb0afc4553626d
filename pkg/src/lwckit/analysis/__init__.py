from .tables import AnalysisTable, compute_ddt, compute_lat, NAMED_SBOXES
from .avalanche import AvalancheStats, avalanche_test
from .models import TrailModel, get_model, list_models
from .search import TrailResult, search_differential_trail, search_linear_trail

__all__ = [
    "AnalysisTable",
    "AvalancheStats",
    "NAMED_SBOXES",
    "TrailModel",
    "TrailResult",
    "avalanche_test",
    "compute_ddt",
    "compute_lat",
    "get_model",
    "list_models",
    "search_differential_trail",
    "search_linear_trail",
]
