"""
onticlab CLI - Command-Line Interface

Usage:
    onticlab born-check --config experiments/born-check.conf
    onticlab theorem2 --format json --out results/theorem2.json
    onticlab list
    onticlab --help
"""

from onticlab.cli.cli import app

__all__ = ['app']
