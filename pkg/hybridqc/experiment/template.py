#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
from importlib import resources

from hybridqc import exceptions
from hybridqc.experiment import pathed


class Collection(pathed.Pathed):
    """A directory of bundled files of one kind"""
    _mask = None

    def get_path(self, name):
        return os.path.join(self.path, self._mask % name)

    def names(self):
        prefix, _, suffix = self._mask.partition('%s')
        ret = []
        for filename in sorted(os.listdir(self.path)):
            if filename.startswith(prefix) and filename.endswith(suffix):
                ret.append(filename[len(prefix):len(filename) - len(suffix)])
        return ret


class PresetCollection(Collection):
    _mask = '%s.cfg'


class Template(pathed.Pathed):
    """Finds the experiment presets shipped with hybridqc.

    :param path: presets are loaded from the hybridqc package
      if `path` is not provided.
    """
    pkg = 'hybridqc.experiment'
    subdir = 'templates'

    def __new__(cls, path=None):
        if path is None:
            path = cls._find_path(cls.pkg)
        return super(Template, cls).__new__(cls, path)

    def __init__(self, path=None):
        if path is None:
            path = Template._find_path(self.pkg)
        super(Template, self).__init__(path)
        self.presets = PresetCollection(os.path.join(path, 'presets'))

    @classmethod
    def _find_path(cls, pkg):
        """Returns the absolute path of the templates of a package"""
        return str(resources.files(pkg).joinpath(cls.subdir))

    def get_preset(self, name):
        """Path of the preset called `name`"""
        path = self.presets.get_path(name)
        if not os.path.exists(path):
            raise exceptions.UsageError(
                "Unknown preset %r; available presets are %s"
                % (name, ', '.join(self.presets.names())))
        return path
