# This file is part of qschur-smallreps.
#
# Copyright 2026 The qschur-smallreps Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# SPDX-License-Identifier: Apache-2.0

# pylint: disable=useless-suppression,missing-function-docstring,missing-class-docstring
# pylint: disable=too-many-statements,too-many-instance-attributes,missing-return-doc
# pylint: disable=missing-return-type-doc,no-value-for-parameter,protected-access,
# pylint: disable=too-many-public-methods,no-self-use

import json
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from qschur.smallreps import database
from qschur.smallreps.verify import Failure, Report, Status


def make_report(suite="qgl", n=3, failures=()):
    status = Status.FAIL if failures else Status.PASS
    return Report(suite, {"n": n, "r": 2}, 10, list(failures), status, 0)


class UnitTests(unittest.TestCase):
    @mock.patch("qschur.smallreps.database.sqlite3.connect")
    def test_initialize(self, mock_sqlite3_connect):
        path_to_database = mock.MagicMock()

        database.ReportArchiveSQLite(path_to_database)

        mock_sqlite3_connect.assert_called_once_with(path_to_database)
        mock_sqlite3_connect.return_value.cursor.assert_called_once_with()
        execute_expected_arg = (
            "CREATE TABLE IF NOT EXISTS reports "
            "(suite TEXT NOT NULL, config TEXT NOT NULL, status TEXT NOT NULL, "
            "cases INTEGER NOT NULL, failures TEXT NOT NULL, elapsed_ms INTEGER NOT NULL, "
            "version TEXT NOT NULL, PRIMARY KEY (suite, config))"
        )
        mock_sqlite3_connect.return_value.cursor.return_value.execute.assert_called_once_with(
            execute_expected_arg
        )
        mock_sqlite3_connect.return_value.commit.assert_called_once_with()
        mock_sqlite3_connect.return_value.close.assert_called_once_with()

    @mock.patch("qschur.smallreps.database.sqlite3.connect")
    def test_store_report(self, mock_sqlite3_connect):
        mock_database_name = mock.MagicMock()
        mock_cursor = mock_sqlite3_connect.return_value.cursor.return_value

        db = database.ReportArchiveSQLite(mock_database_name, version="1.2.3")
        mock_sqlite3_connect.reset_mock()

        report = make_report(failures=[Failure("QGL1", "a", "b")])
        db.store_report(report)

        mock_sqlite3_connect.assert_called_once_with(mock_database_name)
        mock_cursor.execute.assert_called_once_with(
            "INSERT OR REPLACE INTO reports "
            "(suite, config, status, cases, failures, elapsed_ms, version) "
            "VALUES (?, ?, ?, ?, ?, ?, ?)",
            (
                "qgl",
                '{"n": 3, "r": 2}',
                "fail",
                10,
                '[{"case": "QGL1", "lhs": "a", "rhs": "b"}]',
                0,
                "1.2.3",
            ),
        )
        mock_sqlite3_connect.return_value.commit.assert_called_once_with()
        mock_sqlite3_connect.return_value.close.assert_called_once_with()

    @mock.patch("qschur.smallreps.database.sqlite3.connect")
    def test_load_report_not_found(self, mock_sqlite3_connect):
        mock_cursor = mock_sqlite3_connect.return_value.cursor.return_value
        mock_cursor.execute.return_value.fetchall.return_value = []

        db = database.ReportArchiveSQLite(mock.MagicMock())

        self.assertIsNone(db.load_report("qgl", {"r": 2, "n": 3}))
        mock_cursor.execute.assert_called_with(
            "SELECT suite, config, status, cases, failures, elapsed_ms, version FROM reports "
            "WHERE suite=? AND config=?",
            ("qgl", '{"n": 3, "r": 2}'),
        )

    @mock.patch.object(database.ReportArchiveSQLite, "delete_report")
    @mock.patch("qschur.smallreps.database.sqlite3.connect")
    def test_load_report_other_version(self, mock_sqlite3_connect, mock_delete_report):
        mock_cursor = mock_sqlite3_connect.return_value.cursor.return_value
        mock_cursor.execute.return_value.fetchall.return_value = [
            ("qgl", '{"n": 3, "r": 2}', "pass", 10, "[]", 0, "0.0.1")
        ]

        db = database.ReportArchiveSQLite(mock.MagicMock(), version="1.2.3")

        with self.assertLogs(level="WARNING"):
            self.assertIsNone(db.load_report("qgl", {"n": 3, "r": 2}))
        mock_delete_report.assert_called_once_with("qgl", {"n": 3, "r": 2})

    @mock.patch("qschur.smallreps.database.sqlite3.connect")
    def test_delete_reports_from_suite(self, mock_sqlite3_connect):
        mock_cursor = mock_sqlite3_connect.return_value.cursor.return_value

        db = database.ReportArchiveSQLite(mock.MagicMock())
        db.delete_reports_from_suite("jm")

        mock_cursor.execute.assert_called_with("DELETE FROM reports WHERE suite=?", ("jm",))

    @mock.patch("qschur.smallreps.database.sqlite3.connect")
    def test_clear(self, mock_sqlite3_connect):
        mock_cursor = mock_sqlite3_connect.return_value.cursor.return_value

        db = database.ReportArchiveSQLite(mock.MagicMock())
        db.clear()

        mock_cursor.execute.assert_called_with("DELETE FROM reports", ())

    def test_config_key_is_canonical(self):
        self.assertEqual(
            database.config_key({"r": 2, "n": 3}), database.config_key({"n": 3, "r": 2})
        )
        self.assertEqual(json.loads(database.config_key({"n": 3})), {"n": 3})


class FileArchiveTests(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = Path(self.tmp.name) / "reports.db"

    def tearDown(self):
        self.tmp.cleanup()

    def test_store_load_and_replace(self):
        db = database.ReportArchiveSQLite(self.path)
        first = make_report()
        db.store_report(first)
        self.assertEqual(db.load_report("qgl", {"r": 2, "n": 3}), first)

        second = make_report(failures=[Failure("QGL3", "x", "y")])
        db.store_report(second)
        self.assertEqual(db.load_all_reports(), [second])

    def test_delete(self):
        db = database.ReportArchiveSQLite(self.path)
        db.store_report(make_report("qgl", 3))
        db.store_report(make_report("qgl", 4))
        db.store_report(make_report("jm", 3))
        db.delete_report("qgl", {"n": 3, "r": 2})
        self.assertEqual([r.suite for r in db.load_all_reports()], ["jm", "qgl"])
        db.delete_reports_from_suite("qgl")
        self.assertEqual([r.suite for r in db.load_all_reports()], ["jm"])
        db.clear()
        self.assertEqual(db.load_all_reports(), [])

    def test_reports_of_other_versions_are_dropped(self):
        database.ReportArchiveSQLite(self.path, version="0.0.1").store_report(make_report())
        db = database.ReportArchiveSQLite(self.path, version="0.0.2")
        with self.assertLogs(level="WARNING"):
            self.assertEqual(db.load_all_reports(), [])
        older = database.ReportArchiveSQLite(self.path, version="0.0.1")
        self.assertEqual(older.load_all_reports(), [])
