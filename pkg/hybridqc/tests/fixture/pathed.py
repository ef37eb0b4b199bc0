#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import shutil
import tempfile

from hybridqc.tests.fixture import base


class Pathed(base.Base):
    # Temporary files

    def setUp(self):
        super(Pathed, self).setUp()
        self.temp_usable_dir = tempfile.mkdtemp(prefix='hybridqc-')

    def tearDown(self):
        super(Pathed, self).tearDown()
        Pathed.purge(self.temp_usable_dir)

    def tmp(self, prefix='', suffix=''):
        """A file name inside this test's directory that does not exist"""
        fd, ret = tempfile.mkstemp(suffix, prefix, self.temp_usable_dir)
        os.close(fd)
        os.remove(ret)
        return ret

    def tmp_csv(self, *p, **k):
        return self.tmp(suffix='.csv', *p, **k)

    def tmp_cfg(self, *p, **k):
        return self.tmp(suffix='.cfg', *p, **k)

    def tmp_named(self, name):
        return os.path.join(self.temp_usable_dir, name)

    def write(self, path, text):
        with open(path, 'w') as fd:
            fd.write(text)
        return path

    @classmethod
    def purge(cls, path):
        """Removes this path if it exists"""
        if os.path.exists(path):
            if os.path.isdir(path):
                shutil.rmtree(path)
            else:
                os.remove(path)
