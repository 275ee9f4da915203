# SPDX-FileCopyrightText: 2025-present hanjinliu <liuhanjin-sc@i.softbank.jp>
#
# SPDX-License-Identifier: BSD 3-Clause
