#!/usr/bin/env python3
"""
Setup script for the hartley toolkit
Installs requirements, checks that the numerical stack imports and writes a .env template
"""

import importlib
import os
import subprocess
import sys

from config import env_template

MIN_PYTHON = (3, 8)
# import name of each runtime requirement
RUNTIME_MODULES = ("numpy", "psutil", "dotenv")


def install_requirements() -> bool:
    if sys.version_info < MIN_PYTHON:
        print(f"❌ Python {MIN_PYTHON[0]}.{MIN_PYTHON[1]}+ required, found {sys.version.split()[0]}")
        return False
    print("📦 pip install -r requirements.txt")
    try:
        subprocess.check_call([sys.executable, "-m", "pip", "install", "-r", "requirements.txt"])
    except subprocess.CalledProcessError as e:
        print(f"❌ pip failed: {e}")
        return False
    return True


def missing_modules() -> list:
    missing = []
    for name in RUNTIME_MODULES:
        try:
            importlib.import_module(name)
        except ImportError:
            missing.append(name)
    return missing


def write_env_template(path: str = '.env.template') -> bool:
    """Write the template unless a .env is already present"""
    if os.path.exists('.env'):
        print("✅ .env already present, template not written")
        return False
    with open(path, 'w') as f:
        f.write(env_template())
    print(f"✅ Wrote {path}; copy it to .env to change the defaults")
    return True


def main() -> int:
    if not install_requirements():
        return 1
    missing = missing_modules()
    if missing:
        print(f"❌ still not importable: {', '.join(missing)}")
        return 1
    write_env_template()
    print("\n🎉 Ready. Try:")
    print("   pytest")
    print("   python main.py verify --N 8 --nu -2..2")
    return 0


if __name__ == "__main__":
    sys.exit(main())
