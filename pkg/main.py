"""Simple entrypoint to run the lab CLI without installing the console script."""

from ringlab.cli import main

if __name__ == "__main__":
    main()
