"""Allow ``python -m src``."""
from .main import run

run()
