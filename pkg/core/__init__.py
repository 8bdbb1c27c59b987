"""
giventhat core

Simplification of negated-property automata using knowledge about the
system under verification.

Architecture:
- boolfn/: BDDs and irredundant sum-of-products covers
- ltl/: LTL formulas, parsing, rewriting, lasso semantics
- automaton/: TGBAs, product/sum, SCC analyses, metrics
- translate/: LTL to TGBA translation and automaton simplification
- complement/: complementation (via formulas, or generic rank-based)
- stutter/: stutter-insensitive closure and stutter-sensitive part
- given/: knowledge integration strategies
- sysmc/: explicit systems, knowledge seeking, model checking
- io/: HOA, KTS and fact-file formats
- bench/: benchmark runner and reports
- config/, utils/: settings, logging, errors, deadlines
- cli/: command-line interface
"""

__version__ = "0.1.0"
