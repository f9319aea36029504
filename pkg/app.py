"""
Theta Identity Prover
=====================

Command-line entry point.

Subcommands:
- verify: prove (or check to order N) an identity given in a `.theta` file
- pi: integer points of the fundamental parallelepiped of W
- relations: contiguous relations shared by all terms of an identity
- expand: truncated multivariate expansions
- discover: linear dependencies among candidate theta products
- explain: transcript of a saved certificate

Usage:
    python app.py verify data/identities/bailey.theta --shifts data/identities/bailey.shifts
    python app.py pi "(1,1);(0,2)"
    python app.py discover data/identities/abc_relations.rel data/identities/abc_candidates.cand

Related Files:
- theta/cli/commands.py: subcommands and exit codes
- services/config/run_config.py: THETA_ORDER, THETA_OUTPUT, THETA_DATA_DIR
- data/identities/: golden identities
"""

from __future__ import annotations
import sys
from pathlib import Path

# ============================================================================
# PATH SETUP
# ============================================================================

# Add project root to Python path
ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from theta.cli import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
