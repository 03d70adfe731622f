"""Entry point for module execution: python -m garside."""

from garside.main import main

if __name__ == "__main__":
    main()
