"""
   Objects bound to a file or directory.
"""

import os
import logging

from hybridqc import exceptions
from hybridqc.util import KeyedInstance


log = logging.getLogger(__name__)

class Pathed(KeyedInstance):
    """
    A class associated with a path.

    Only one instance of this class may exist for a particular path;
    __new__ will return an existing instance if possible
    """

    @classmethod
    def _key(cls, path, *p, **k):
        return os.path.abspath(str(path))

    def __init__(self, path):
        self.path = str(path)

    @classmethod
    def require_found(cls, path):
        """Ensures a given path already exists"""
        if not os.path.exists(path):
            raise exceptions.PathNotFoundError(path)

    def __str__(self):
        return self.path


class OutputDir(Pathed):
    """Directory receiving the files of one command; created on demand"""

    def __init__(self, path):
        super(OutputDir, self).__init__(path)
        if os.path.exists(self.path) and not os.path.isdir(self.path):
            raise exceptions.PathFoundError(self.path)

    def ensure(self):
        if not os.path.isdir(self.path):
            log.debug('Creating output directory %s', self.path)
            os.makedirs(self.path)
        return self

    def join(self, filename):
        return os.path.join(self.path, filename)
