from .tableau import TableauReasoner, classify, entails
from .normalization import NormalizedTBox, normalize
from .saturation import InferenceTrace, saturate_with_tracing, saturation_entails
from .locality import extract_star_module, is_bot_local, is_top_local, module_for_goal

__all__ = [
    "TableauReasoner", "classify", "entails",
    "NormalizedTBox", "normalize",
    "InferenceTrace", "saturate_with_tracing", "saturation_entails",
    "extract_star_module", "is_bot_local", "is_top_local", "module_for_goal",
]
