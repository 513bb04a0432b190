import contextlib
import sys
from pathlib import Path


def fmt(value):
    """17 significant digits in scientific notation."""
    return f"{float(value):.16e}"


def fmt_point(value):
    """Format a real or complex location as a single comma-free CSV field."""
    z = complex(value)
    if z.imag == 0.0 and not isinstance(value, complex):
        return fmt(z.real)
    return f"{z.real:.16e}{z.imag:+.16e}j"


@contextlib.contextmanager
def open_output(path):
    """Open ``path`` for writing; ``"-"`` means standard output."""
    if path is None or str(path) == "-":
        yield sys.stdout
        return
    path = Path(path)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        yield fh


def write_rows(path, header, rows):
    with open_output(path) as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")
