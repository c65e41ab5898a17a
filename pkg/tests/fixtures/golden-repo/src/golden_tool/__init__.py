# SPDX-FileCopyrightText: 2024 Example Research Group
# SPDX-License-Identifier: MIT
__version__ = "1.2.3"
