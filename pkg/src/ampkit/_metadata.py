# Copyright ampkit Developers.
# See LICENSE for details.

"""
ampkit package metadata definitions.
"""

version_tuple = (0, 1, 0)
version_string = ".".join(map(str, version_tuple))
