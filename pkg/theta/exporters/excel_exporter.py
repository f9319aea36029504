"""Excel export of certificates."""

from __future__ import annotations
from pathlib import Path

import pandas as pd

from services.utils import ensure_dir
from theta.prover.certificate import Certificate
from theta.prover.explain import checks_frame, relations_frame, verdict_label


def export_certificate_xlsx(cert: Certificate, path: Path) -> Path:
    """Write "Summary", "Relations" and "Checks" sheets to path."""
    path = Path(path)
    ensure_dir(path.parent)

    summary = pd.DataFrame([
        {"Item": "Identity", "Value": cert.identity.replace("\n", " ")},
        {"Item": "Mode", "Value": str(cert.mode)},
        {"Item": "Status", "Value": cert.status.value},
        {"Item": "Result", "Value": verdict_label(cert)},
        {"Item": "Detail", "Value": cert.detail},
        {"Item": "|Pi_W|", "Value": str(len(cert.pi))},
    ])

    with pd.ExcelWriter(path, engine="xlsxwriter") as xw:
        summary.to_excel(xw, index=False, sheet_name="Summary")
        ws = xw.sheets["Summary"]
        ws.set_column(0, 0, 16)
        ws.set_column(1, 1, 90)

        relations_frame(cert).to_excel(xw, index=False, sheet_name="Relations")
        ws = xw.sheets["Relations"]
        ws.set_column(0, 0, 4)
        ws.set_column(1, 1, 18)
        ws.set_column(2, 2, 60)
        ws.set_column(3, 3, 10)

        checks = checks_frame(cert)
        checks.to_excel(xw, index=False, sheet_name="Checks")
        ws = xw.sheets["Checks"]
        ws.set_column(0, 0, 18)
        ws.set_column(1, max(len(checks.columns) - 2, 1), 36)
        ws.set_column(len(checks.columns) - 1, len(checks.columns) - 1, 18)
    return path
