#!/usr/bin/env python
# -*- coding: utf-8 -*-

from hybridqc.tests.fixture.base import Base, slow
from hybridqc.tests.fixture.pathed import Pathed
from hybridqc.tests.fixture.shell import Shell
from hybridqc.tests.fixture.summary import read_rows, read_summary
