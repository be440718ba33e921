"""Pass/fail reports for exact verification runs.

Every verifier in this package returns a Report: an ordered list of named
checks, each either clean or carrying the exact residual matrix that failed
to vanish.  Residuals serialize truncated to an 8x8 corner plus a SHA-256
digest of the full entry list, so reports stay small but failures stay
reproducible.
"""

from __future__ import annotations

import hashlib

RESIDUAL_CORNER = 8


def residual_digest(matrix):
    payload = "%d:%d:" % (matrix.rows, matrix.cols)
    payload += ",".join(matrix.field.fmt(x) for x in matrix.data)
    return hashlib.sha256(payload.encode()).hexdigest()


class CheckResult:

    def __init__(self, name, passed, residual=None, note=""):
        self.name = name
        self.passed = bool(passed)
        self.residual = residual
        self.note = note

    def to_json(self):
        out = {"name": self.name, "passed": self.passed}
        if self.note:
            out["note"] = self.note
        if self.residual is not None and not self.passed:
            r = self.residual
            k = RESIDUAL_CORNER
            out["residual"] = {
                "rows": r.rows,
                "cols": r.cols,
                "top_left": [[r.field.fmt(r[i, j])
                              for j in range(min(r.cols, k))]
                             for i in range(min(r.rows, k))],
                "sha256": residual_digest(r),
            }
        return out

    def __repr__(self):
        return "<%s: %s>" % (self.name, "ok" if self.passed else "FAIL")


class Report:

    def __init__(self, title=""):
        self.title = title
        self.checks = []

    def add(self, name, passed, residual=None, note=""):
        self.checks.append(CheckResult(name, passed, residual, note))
        return passed

    def require_zero(self, name, matrix, note=""):
        """Record whether an exact residual matrix vanishes."""
        ok = matrix.is_zero()
        self.checks.append(CheckResult(name, ok, None if ok else matrix, note))
        return ok

    def require_equal(self, name, left, right, note=""):
        return self.require_zero(name, left - right, note)

    def require(self, name, condition, note=""):
        self.checks.append(CheckResult(name, bool(condition), None, note))
        return bool(condition)

    def merge(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(CheckResult(
                prefix + c.name if prefix else c.name,
                c.passed, c.residual, c.note))
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def summary(self):
        lines = []
        if self.title:
            lines.append("%s: %s" % (self.title, "PASS" if self.passed else "FAIL"))
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = "  [%s] %s" % (mark, c.name)
            if c.note:
                line += "  (%s)" % c.note
            lines.append(line)
            if not c.passed and c.residual is not None:
                lines.append("        residual %dx%d, sha256 %s"
                             % (c.residual.rows, c.residual.cols,
                                residual_digest(c.residual)[:16]))
                for row in c.residual.pretty(RESIDUAL_CORNER,
                                             RESIDUAL_CORNER).splitlines():
                    lines.append("        " + row)
        return "\n".join(lines)

    def to_json(self):
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}

    def __repr__(self):
        n_fail = len(self.failures())
        return "<Report %r: %d checks, %d failing>" % (
            self.title, len(self.checks), n_fail)
