"""CSV and JSON serialisation of zero catalogs and verification reports.

Reals are written with 17 significant digits so they round-trip exactly;
in JSON they are strings, which keeps the values independent of the
reader's float parser.
"""
import contextlib
import csv
import json

from . import __version__
from .zerofinder import CONSTANTS

CSV_COLUMNS = (
    "c", "d", "a", "b", "x_pred1", "y_pred1", "x_pred2", "y_pred2",
    "x_refined", "y_refined", "residual", "theta_scaled", "newton_iters",
)
GENERATED_BY = f"e2zeros {__version__}"


@contextlib.contextmanager
def _sink(target):
    # a path, or an already open text stream
    if hasattr(target, "write"):
        yield target
    else:
        with open(target, "w", newline="", encoding="utf-8") as fh:
            yield fh


def fmt(x):
    return format(float(x) + 0.0, ".17g")  # + 0.0 turns -0.0 into 0.0


def record_row(rec):
    g = rec.matrix
    return {
        "c": g.c, "d": g.d, "a": g.a, "b": g.b,
        "x_pred1": fmt(rec.predicted1.real), "y_pred1": fmt(rec.predicted1.imag),
        "x_pred2": fmt(rec.predicted2.real), "y_pred2": fmt(rec.predicted2.imag),
        "x_refined": fmt(rec.refined.real), "y_refined": fmt(rec.refined.imag),
        "residual": fmt(rec.residual), "theta_scaled": fmt(rec.theta_scaled),
        "newton_iters": rec.newton_iters,
    }


def export_csv(catalog, path):
    if not catalog:
        raise ValueError("empty catalog")
    with _sink(path) as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for rec in catalog:
            writer.writerow(record_row(rec))


def read_csv(path):
    """Parse a catalog CSV back into dicts of ints and floats."""
    ints = {"c", "d", "a", "b", "newton_iters"}
    with open(path, newline="", encoding="utf-8") as fh:
        return [{k: int(v) if k in ints else float(v) for k, v in row.items()}
                for row in csv.DictReader(fh)]


def constants_block():
    return {"v0": fmt(CONSTANTS.v0), "lambda0": fmt(CONSTANTS.lambda0),
            "strip_eps": fmt(CONSTANTS.strip_eps)}


def catalog_document(catalog):
    records = []
    for rec in catalog:
        row = record_row(rec)
        row["label"] = str(rec.label)
        records.append(row)
    return {"constants": constants_block(), "records": records, "generated_by": GENERATED_BY}


def report_document(report):
    checks = [
        {"name": c.name, "passed": c.passed, "measured": fmt(c.measured),
         "threshold": fmt(c.threshold), "relation": c.relation}
        for c in report.checks
    ]
    return {
        "constants": constants_block(),
        "checks": checks,
        "passed": report.passed,
        "note": "floating-point replication of the bounds, not interval arithmetic",
        "generated_by": GENERATED_BY,
    }


def export_json(obj, path):
    """Write a catalog (sequence of records) or a verification report."""
    from .verify import Report

    doc = report_document(obj) if isinstance(obj, Report) else catalog_document(obj)
    with _sink(path) as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
