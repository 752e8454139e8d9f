#!/usr/bin/env python3
"""
Setup script for the bicirculant Hamilton cycle toolkit
Installs dependencies and prepares the output directory.
"""

import os
import subprocess
import sys


def install_requirements():
    """Install required packages."""
    print("Installing required packages...")
    try:
        subprocess.check_call([sys.executable, "-m", "pip", "install", "-r", "requirements.txt"])
        print("Dependencies installed successfully")
        return True
    except subprocess.CalledProcessError as e:
        print(f"Failed to install dependencies: {e}")
        return False


def create_directories():
    """Create the output and log directories."""
    print("Creating directories...")
    for directory in ['output', 'logs']:
        os.makedirs(directory, exist_ok=True)
        print(f"Created directory: {directory}")
    return True


def check_python_version():
    """The toolkit needs Python 3.8+ (pow(x, -1, m) for modular inverses)."""
    print("Checking Python version...")
    version = sys.version_info
    if (version.major, version.minor) >= (3, 8):
        print(f"Python {version.major}.{version.minor} is compatible")
        return True
    print(f"Python {version.major}.{version.minor} is not compatible. Please use Python 3.8+")
    return False


def main():
    """Main setup function."""
    print("Setting up the bicirculant toolkit...")
    print("=" * 40)

    if not check_python_version():
        sys.exit(1)

    if not install_requirements():
        print("\nPlease install dependencies manually:")
        print("pip install -r requirements.txt")
        sys.exit(1)

    create_directories()

    print("\n" + "=" * 40)
    print("Setup completed successfully!")
    print("\nNext steps:")
    print("1. Copy .env.example to .env and adjust the search budget if needed")
    print("2. Run: python main.py ham 'GRW 10 2 4 1'")
    print("3. Run the tests: pytest")
    print("4. Run the acceptance workflow: python workflow.py --output-dir output")


if __name__ == "__main__":
    main()
