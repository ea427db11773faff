import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from supersmooth.gindex import GIndex  # noqa: E402
from supersmooth.supernumber import Supernumber  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

fractions = st.fractions(min_value=-4, max_value=4, max_denominator=4)
nonzero_fractions = fractions.filter(bool)


@st.composite
def blades(draw, L, D=None, parity=None):
    D = L if D is None else D
    if L == 0:
        return ()
    gens = draw(st.sets(st.integers(1, L), max_size=min(D, L)))
    if parity is not None and len(gens) % 2 != parity:
        if len(gens) < min(D, L) and len(gens) < L:
            free = sorted(set(range(1, L + 1)) - gens)
            gens = gens | {draw(st.sampled_from(free))}
        elif gens:
            gens = gens - {min(gens)}
    return tuple(sorted(gens))


@st.composite
def supernumbers(draw, L=None, D=None, parity=None, max_terms=6):
    L = draw(st.integers(0, 6)) if L is None else L
    D = L if D is None else D
    keys = draw(st.lists(blades(L, D, parity), max_size=max_terms, unique=True))
    terms = {GIndex(k): draw(fractions) for k in keys if parity is None or len(k) % 2 == parity}
    return Supernumber(terms, L, D)


@st.composite
def even_supernumbers(draw, L, D=None, real_body=True):
    X = draw(supernumbers(L, D, parity=0))
    return X + Fraction(draw(nonzero_fractions))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
