"""
Command-line subcommands for Tyke.
"""
