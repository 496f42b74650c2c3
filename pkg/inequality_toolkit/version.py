#!/usr/bin/env python
u"""
version.py (10/2026)
Gets version number of a package

UPDATE HISTORY:
    Updated 10/2026: fall back to version.txt within a source tree
    Written 11/2023
"""
import pathlib
import importlib.metadata

try:
    # package metadata
    metadata = importlib.metadata.metadata("inequality-toolkit")
except importlib.metadata.PackageNotFoundError:
    # running from a source tree
    version_file = pathlib.Path(__file__).absolute().parent.parent
    version = version_file.joinpath('version.txt').read_text().strip()
    project_name = 'inequality-toolkit'
else:
    # get version
    version = metadata["version"]
    # get project name
    project_name = metadata["Name"]
# append "v" before the version
full_version = f"v{version}"
