""" Main application entry point.

    python -m denumerant  ...

"""
from .cli import main


# Make the script executable.

if __name__ == "__main__":
    raise SystemExit(main())
