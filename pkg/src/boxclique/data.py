"""Access to the bundled plain-text fixtures."""
from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

_ENV = "BOXCLIQUE_FIXTURES"


def fixture_dir() -> Path:
    """Fixture directory; ``$BOXCLIQUE_FIXTURES`` overrides the bundled copy."""
    env = os.environ.get(_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("boxclique") / "fixtures"))


def read_text(name: str) -> str:
    return (fixture_dir() / name).read_text(encoding="utf-8")


def data_lines(name: str) -> list[str]:
    """Non-empty lines with ``#`` comments stripped."""
    out = []
    for line in read_text(name).splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def sections(name: str) -> dict[str, list[str]]:
    """Split a fixture into ``== name: header`` blocks; the header is kept under ``@name``."""
    out: dict[str, list[str]] = {}
    cur = None
    for line in data_lines(name):
        if line.startswith("== "):
            head, _, rest = line[3:].partition(":")
            cur = head.strip()
            out[cur] = []
            if rest.strip():
                out["@" + cur] = [rest.strip()]
        elif cur is not None:
            out[cur].append(line)
    return out


# ---------------------------------------------------------------------------
# typed loaders

def _cycle_perm(text: str, n: int) -> tuple[int, ...]:
    """Cycle notation over 1..n to a 0-based image tuple."""
    import re

    img = list(range(n))
    for cyc in re.findall(r"\(([^)]*)\)", text):
        xs = [int(t) - 1 for t in cyc.split(",") if t.strip()]
        for k, x in enumerate(xs):
            img[x] = xs[(k + 1) % len(xs)]
    return tuple(img)


def load_clique(name: str) -> list:
    from .core import parse_box

    return [parse_box(line) for line in sections("cliques.txt")[name]]


def load_matrix(name: str) -> list[list[int]]:
    return [[int(x) for x in line.split()] for line in sections("adjacency_matrices.txt")[name]]


def load_automorphisms(name: str, n: int = 12) -> list[tuple[int, ...]]:
    return [_cycle_perm(line, n) for line in sections("automorphisms.txt")[name]]


def load_named_profiles() -> dict:
    """name -> (s, Combination)."""
    from .core import parse_combination

    out = {}
    for line in sections("profiles.txt")["named"]:
        name, s, comb = (p.strip() for p in line.split("|"))
        out[name] = (int(s), parse_combination(comb))
    return out


def load_decompositions() -> dict:
    from .core import parse_combination

    out = {}
    for line in sections("profiles.txt")["decomposition"]:
        name, b1, b2 = (p.strip() for p in line.split("|"))
        out[name] = (parse_combination(b1), parse_combination(b2))
    return out


def load_combination_list(section: str) -> list:
    from .core import parse_combination

    return [parse_combination(line) for line in sections("profiles.txt")[section]]


def load_digits(suit: str) -> dict:
    """digit -> Interval for the labelled support of a suit profile."""
    from .core import parse_interval

    out = {}
    for line in sections("profiles.txt")["digits_" + suit]:
        d, v = line.split()
        out[int(d)] = parse_interval(v)
    return out


def load_labelings() -> list[tuple[int, ...]]:
    return [tuple(int(c) for c in line) for line in data_lines("labelings.txt")]


def load_chirality(suit: str) -> list[dict]:
    rows = []
    for line in sections("chirality.txt")[suit]:
        no, cls, sub, labels, length, flag = (p.strip() for p in line.split("|"))
        rows.append({"number": int(no), "class": cls, "subblock": sub, "labels": labels.split(),
                     "length": int(length), "achiral": flag == "achiral"})
    return rows


def load_appendix_b() -> dict:
    """(s, v) -> list of rows {number, profile, e, type2}."""
    import re

    from .core import Combination, parse_interval

    out = {}
    sec = sections("appendix_b.txt")
    for key, body in sec.items():
        if key.startswith("@"):
            continue
        s, v = map(int, re.fullmatch(r"L\((\d+),(\d+)\)", key).groups())
        head = [parse_interval(h) for h in sec["@" + key][0].split()]
        rows = []
        for line in body:
            no, counts, e = (p.strip() for p in line.split("|"))
            ks = [int(x) for x in counts.split()]
            rows.append({"number": int(no),
                         "profile": Combination(dict(zip(head, ks))),
                         "e": int(e.rstrip("'")),
                         "type2": e.endswith("'")})
        out[(s, v)] = rows
    return out


def load_expected() -> dict[str, list[int]]:
    """Golden counts: key -> list of integers."""
    out = {}
    for line in sections("expected.txt")["counts"]:
        key, _, vals = line.partition("=")
        out[key.strip()] = [int(x) for x in vals.split()]
    return out
