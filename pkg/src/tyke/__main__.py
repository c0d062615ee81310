"""
Entry point for running tyke as a module: python -m tyke
"""

from .main import main

if __name__ == "__main__":
    main()
