import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("ODDIND_STRETCH") != "1":
        skip = pytest.mark.skip(reason="stretch item; set ODDIND_STRETCH=1 to run")
        for item in items:
            if "stretch" in item.keywords:
                item.add_marker(skip)
