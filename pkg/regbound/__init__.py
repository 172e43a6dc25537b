# SPDX-License-Identifier: CC-BY-NC-4.0

__version__ = "0.1.0"
