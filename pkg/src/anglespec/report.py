"""Group files and spectrum report serialization (JSON, CSV)."""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

from .group import GeneratorSet
from .moebius import EPS_DET, Moebius, is_identity


class GroupFileError(ValueError):
    pass


class MalformedEntry(GroupFileError):
    def __init__(self, line, text):
        super().__init__(f"line {line}: expected 4 numbers 'a b c d', got {text!r}")
        self.line = line


class NonUnitDeterminant(GroupFileError):
    def __init__(self, index, det):
        super().__init__(f"generator {index}: determinant {det!r} is not 1")
        self.index = index


class IdentityGenerator(GroupFileError):
    def __init__(self, index):
        super().__init__(f"generator {index} is the identity")
        self.index = index


def parse_group_text(text, name=None, degree_bound=1):
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 4:
            raise MalformedEntry(lineno, line)
        try:
            a, b, c, d = (float(x) for x in fields)
        except ValueError:
            raise MalformedEntry(lineno, line) from None
        if not all(math.isfinite(x) for x in (a, b, c, d)):
            raise MalformedEntry(lineno, line)
        det = a * d - b * c
        if abs(det - 1.0) > EPS_DET:
            raise NonUnitDeterminant(len(gens), det)
        m = Moebius(a, b, c, d)
        if is_identity(m):
            raise IdentityGenerator(len(gens))
        gens.append(m)
    if not gens:
        raise GroupFileError("no generators found")
    return GeneratorSet(tuple(gens), name=name, degree_bound=degree_bound)


def parse_group_file(path, degree_bound=1):
    """Read a group file: one generator per line as ``a b c d``; lines
    starting with '#' are comments."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_group_text(text, name=path.stem, degree_bound=degree_bound)


def format_group(gens):
    lines = [f"# {gens.name}" if gens.name else "# generators"]
    for g in gens.gens:
        lines.append(" ".join(repr(x) for x in g.entries))
    return "\n".join(lines) + "\n"


def write_group_file(gens, path):
    Path(path).write_text(format_group(gens), encoding="utf-8")


# -- JSON ---------------------------------------------------------------

def _num(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x + 0.0, ".17g")


def dumps(obj, indent=1, _level=0):
    """JSON with sorted keys and floats at 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None or isinstance(obj, (bool, int, float)):
        return "null" if obj is None else _num(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(obj[k], indent, _level + 1)}"
                 for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    items = list(obj)
    if not items:
        return "[]"
    if all(not isinstance(x, (dict, list, tuple)) for x in items):
        return "[" + ", ".join(dumps(x, indent, _level + 1) for x in items) + "]"
    return "[\n" + ",\n".join(pad + dumps(x, indent, _level + 1) for x in items) + "\n" + end + "]"


def _axis(g):
    start, end = g.endpoints
    if g.is_vertical:
        out = {"kind": "vertical", "x": g.center}
    else:
        out = {"kind": "semicircle", "center": g.center, "radius": g.radius}
    out["orientation"] = [start, end]
    return out


def report_dict(report):
    return {
        "params": dict(report.params),
        "generators": [list(g.entries) for g in report.generators],
        "classes": [
            {"word": list(c.word or ()), "trace": c.trace, "length": c.length,
             "axis": _axis(c.axis)}
            for c in report.classes
        ],
        "records": [
            {"class_i": r.class_i, "class_j": r.class_j,
             "conjugator": list(r.conjugator or ()),
             "point": [r.point.x, r.point.y], "theta": r.theta, "cos2": r.cos2}
            for r in report.records
        ],
        "angle_set": [[theta, mult] for theta, mult in report.angle_set],
        "rational_hits": [
            {"theta": h.theta, "p": h.p, "q": h.q, "phi_q": h.phi_q,
             "bound": h.bound, "ok": h.ok}
            for h in report.rational_hits
        ],
    }


def report_json(report):
    return dumps(report_dict(report)) + "\n"


def write_json(report, path):
    Path(path).write_text(report_json(report), encoding="utf-8")


CSV_HEADER = ["class_i", "class_j", "conjugator", "x", "y", "theta", "cos2"]


def report_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in report.records:
        w.writerow([r.class_i, r.class_j, " ".join(str(x) for x in r.conjugator or ()),
                    _num(r.point.x), _num(r.point.y), _num(r.theta), _num(r.cos2)])
    return buf.getvalue()


def write_csv(report, path):
    Path(path).write_text(report_csv(report), encoding="utf-8")
