from .pinpoint import BruteForceResult, PinpointResult
from .repair import RepairSet
from .bench import CSV_COLUMNS, BenchRow

__all__ = ["BruteForceResult", "PinpointResult", "RepairSet", "CSV_COLUMNS", "BenchRow"]
