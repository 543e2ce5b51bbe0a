#!/usr/bin/env python

# Copyright ampkit Developers.
# See LICENSE for details.

import setuptools

_metadata = {}
with open("src/ampkit/_metadata.py") as f:
    exec(f.read(), _metadata)
with open("README.rst") as f:
    _metadata["description"] = f.read()

setuptools.setup(
    name="ampkit",
    version=_metadata["version_string"],
    description="Small-signal transistor amplifier design: stability, "
                "matching networks, microstrip and bias.",
    long_description=_metadata["description"],
    author="ampkit Developers",
    license="MIT",
    package_dir={"": "src"},
    packages=setuptools.find_packages(where="src"),
    include_package_data=True,
    zip_safe=False,
    python_requires=">=3.8",
    install_requires=[
        "zope.interface",
        "attrs",
        # 0.12.2 has the fix for finding __invariant__ anywhere in the class
        # hierarchy.
        "pyrsistent>=0.12.2",
        "incremental",
        "twisted",
        "eliot",
        "numpy",
        "scipy",
        "matplotlib",
        "tomli; python_version < '3.11'",
    ],
    extras_require={
        "dev": [
            "testtools",
            "fixtures",
            "hypothesis",
            "eliot-tree>=17.1.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "ampkit = ampkit._script:main",
        ],
    },
)
