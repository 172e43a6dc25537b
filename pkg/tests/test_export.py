# SPDX-License-Identifier: CC-BY-NC-4.0

import json

import pytest

from export_catalog import export_variety
from regbound.catalog import catalog_names


def test_export_variety():
    name, record, error = export_variety("ci22")
    assert (name, error) == ("ci22", None)
    assert record["degree"] == 4
    assert record["issues"] == []


def test_export_reports_errors_per_variety():
    name, record, error = export_variety("veronese")
    assert record is None
    assert "unknown variety" in error


@pytest.mark.parametrize("name", catalog_names())
def test_exported_record_survives_json(name):
    _, record, error = export_variety(name)
    assert error is None
    text = json.dumps(record, sort_keys=True, indent=2)
    assert json.dumps(json.loads(text), sort_keys=True, indent=2) == text
