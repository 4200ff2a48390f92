# tests/__init__.py
"""SLTPLab テストパッケージ"""
