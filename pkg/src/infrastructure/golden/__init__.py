"""Golden reference data."""
from .loader import APPENDIX_FILE, GoldenMatrix, load_appendix_matrix, load_golden_matrix

__all__ = ["APPENDIX_FILE", "GoldenMatrix", "load_appendix_matrix", "load_golden_matrix"]
