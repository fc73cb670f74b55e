"""
Report storage: the suite writes one JSON and one text report per run.
"""

import json
import os
from typing import Dict, Optional, Tuple

from services.config import get_settings

REPORT_JSON = "report.json"
REPORT_TEXT = "report.txt"


def ensure_storage(directory: Optional[str] = None) -> str:
    """Ensure the report directory exists and return its path."""
    directory = directory or get_settings().report_dir
    os.makedirs(directory, exist_ok=True)
    return directory


def write_report(document: Dict, text: str, directory: Optional[str] = None) -> Tuple[str, str]:
    """Write both report forms; returns their paths."""
    directory = ensure_storage(directory)
    json_path = os.path.join(directory, REPORT_JSON)
    text_path = os.path.join(directory, REPORT_TEXT)

    with open(json_path, 'w', encoding='utf-8') as f:
        json.dump(document, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write("\n")

    with open(text_path, 'w', encoding='utf-8') as f:
        f.write(text)

    return json_path, text_path


def read_report(directory: Optional[str] = None) -> Optional[Dict]:
    """Load the last JSON report, if any."""
    path = os.path.join(directory or get_settings().report_dir, REPORT_JSON)
    if not os.path.exists(path):
        return None
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)
