"""Text formats: HOA automata, KTS systems and fact files."""

from core.io.facts import format_facts, parse_facts, read_facts, write_facts
from core.io.hoa import hoa_parse, hoa_print, read_hoa, write_hoa
from core.io.kts import parse_kts, print_kts, read_kts, write_kts

__all__ = [
    "format_facts",
    "hoa_parse",
    "hoa_print",
    "parse_facts",
    "parse_kts",
    "print_kts",
    "read_facts",
    "read_hoa",
    "read_kts",
    "write_facts",
    "write_hoa",
    "write_kts",
]
