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
"""
API for an SQLite archive of verification reports.
"""

from __future__ import annotations

import json
import logging
import sqlite3
from abc import ABC, abstractmethod
from pathlib import Path

from qschur.smallreps import __version__
from qschur.smallreps.verify import Report


def config_key(config: dict) -> str:
    """Canonical text of a suite configuration, used as part of the archive key."""
    return json.dumps(config, sort_keys=True)


class ReportArchive(ABC):
    """
    Abstract class for a store of verification reports, one per suite and configuration.
    """

    @abstractmethod
    def store_report(self, report: Report) -> None:
        """
        Store a report. It will overwrite a previous report for the same suite and configuration.

        Parameters
        ----------
        report : Report
            The report to store.
        """

    @abstractmethod
    def load_report(self, suite: str, config: dict) -> Report | None:
        """
        Load a report. If a report is found but was produced by another library version, it will
        be deleted and None will be returned.

        Parameters
        ----------
        suite : str
            The suite name.
        config : dict
            The configuration the suite ran with.

        Returns
        -------
        Report | None
            The stored report if present and produced by the running version, None otherwise.
        """

    @abstractmethod
    def delete_report(self, suite: str, config: dict) -> None:
        """
        Delete a report.

        Parameters
        ----------
        suite : str
            The suite name.
        config : dict
            The configuration the suite ran with.
        """

    @abstractmethod
    def delete_reports_from_suite(self, suite: str) -> None:
        """
        Delete all the reports of a suite.

        Parameters
        ----------
        suite : str
            The suite name.
        """

    @abstractmethod
    def clear(self) -> None:
        """
        Fully clear the archive.
        """

    @abstractmethod
    def load_all_reports(self) -> list[Report]:
        """
        Load all the reports produced by the running version, sorted by suite and configuration.

        Returns
        -------
        list[Report]
            The stored reports.
        """


class ReportArchiveSQLite(ReportArchive):
    """
    An implementation of ReportArchive on the standard SQLite library. Reports are stored as
    JSON text.
    """

    def __init__(self, database_path: Path, version: str = __version__) -> None:
        """
        Parameters
        ----------
        database_path : Path
            The path to the file to use to instantiate the archive.
        version : str
            Library version written next to each report.
        """
        self.__database_path = database_path
        self.__version = version
        connection = sqlite3.connect(self.__database_path)
        connection.cursor().execute(
            "CREATE TABLE IF NOT EXISTS reports "
            "(suite TEXT NOT NULL, config TEXT NOT NULL, status TEXT NOT NULL, "
            "cases INTEGER NOT NULL, failures TEXT NOT NULL, elapsed_ms INTEGER NOT NULL, "
            "version TEXT NOT NULL, PRIMARY KEY (suite, config))"
        )
        connection.commit()
        connection.close()

    def _execute(self, query: str, params: tuple = ()) -> list[tuple]:
        connection = sqlite3.connect(self.__database_path)
        try:
            rows = connection.cursor().execute(query, params).fetchall()
            connection.commit()
        finally:
            connection.close()
        return rows

    def store_report(self, report: Report) -> None:
        """
        Store a report. It will overwrite a previous report for the same suite and configuration.

        Parameters
        ----------
        report : Report
            See documentation in ReportArchive.
        """
        failures = json.dumps([f._asdict() for f in report.failures])
        self._execute(
            "INSERT OR REPLACE INTO reports "
            "(suite, config, status, cases, failures, elapsed_ms, version) "
            "VALUES (?, ?, ?, ?, ?, ?, ?)",
            (
                report.suite,
                config_key(report.config),
                report.status.value,
                report.cases,
                failures,
                report.elapsed_ms,
                self.__version,
            ),
        )

    def _parse_row(self, row: tuple) -> Report | None:
        suite, config, status, cases, failures, elapsed_ms, version = row
        if version != self.__version:
            logging.warning(
                "Discarding report of %s stored by version %s (running %s)",
                suite,
                version,
                self.__version,
            )
            self.delete_report(suite, json.loads(config))
            return None
        return Report.from_dict(
            {
                "suite": suite,
                "config": json.loads(config),
                "cases": cases,
                "failures": json.loads(failures),
                "status": status,
                "elapsed_ms": elapsed_ms,
            }
        )

    def load_report(self, suite: str, config: dict) -> Report | None:
        """
        Load a report. If a report is found but was produced by another library version, it will
        be deleted and None will be returned.

        Parameters
        ----------
        suite : str
            See documentation in ReportArchive.
        config : dict
            See documentation in ReportArchive.

        Returns
        -------
        Report | None
            See documentation in ReportArchive.
        """
        rows = self._execute(
            "SELECT suite, config, status, cases, failures, elapsed_ms, version FROM reports "
            "WHERE suite=? AND config=?",
            (suite, config_key(config)),
        )
        if not rows:
            return None
        return self._parse_row(rows[0])

    def delete_report(self, suite: str, config: dict) -> None:
        """
        Delete a report.

        Parameters
        ----------
        suite : str
            See documentation in ReportArchive.
        config : dict
            See documentation in ReportArchive.
        """
        self._execute(
            "DELETE FROM reports WHERE suite=? AND config=?", (suite, config_key(config))
        )

    def delete_reports_from_suite(self, suite: str) -> None:
        """
        Delete all the reports of a suite.

        Parameters
        ----------
        suite : str
            See documentation in ReportArchive.
        """
        self._execute("DELETE FROM reports WHERE suite=?", (suite,))

    def clear(self) -> None:
        """
        Fully clear the archive.
        """
        self._execute("DELETE FROM reports")

    def load_all_reports(self) -> list[Report]:
        """
        Load all the reports produced by the running version.

        Returns
        -------
        list[Report]
            See documentation in ReportArchive.
        """
        rows = self._execute(
            "SELECT suite, config, status, cases, failures, elapsed_ms, version FROM reports "
            "ORDER BY suite, config"
        )
        reports = []
        for row in rows:
            report = self._parse_row(row)
            if report is not None:
                reports.append(report)
        return reports
