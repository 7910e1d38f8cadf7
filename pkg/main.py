"""Main entry point for the split cubic toolkit."""
from src.main import run

if __name__ == "__main__":
    run()
