"""
Market file format: parsing, serialization and command-line value parsing.
"""

from .arguments import parse_matching, parse_shares
from .parser import MarketFileParser, load_market_file, parse_market
from .writer import serialize_market

__all__ = [
    'MarketFileParser',
    'load_market_file',
    'parse_market',
    'parse_matching',
    'parse_shares',
    'serialize_market',
]
