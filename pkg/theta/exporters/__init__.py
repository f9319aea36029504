"""Certificate export: canonical JSON and Excel workbooks."""

from .certificate_json import (
    certificate_from_data,
    certificate_from_json,
    certificate_to_data,
    certificate_to_json,
    form_from_data,
    form_to_data,
)
from .excel_exporter import export_certificate_xlsx

__all__ = [
    "certificate_from_data",
    "certificate_from_json",
    "certificate_to_data",
    "certificate_to_json",
    "form_from_data",
    "form_to_data",
    "export_certificate_xlsx",
]
