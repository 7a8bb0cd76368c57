# hyperfactor/src/hyperfactor/core/__init__.py
