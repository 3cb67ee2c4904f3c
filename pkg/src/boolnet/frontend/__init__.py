from .dot import export_dot
from .io import detect_format, load_network, loads_network
from .parser import parse_network
from .reports import census_report_to_dict, report_schema, theorem_report_to_dict

__all__ = [
    "census_report_to_dict",
    "detect_format",
    "export_dot",
    "load_network",
    "loads_network",
    "parse_network",
    "report_schema",
    "theorem_report_to_dict",
]
