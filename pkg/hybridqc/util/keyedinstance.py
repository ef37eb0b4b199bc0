#!/usr/bin/env python
# -*- coding: utf-8 -*-

class KeyedInstance(object):
    """A class with at most one instance per key.

    Subclasses define :meth:`_key`. Constructing an object whose key is
    already known returns the existing instance; ``__init__`` still runs,
    so subclasses that hold expensive state must make it idempotent.
    Each subclass keeps its own registry.
    """

    _instances = dict()

    def __new__(cls, *p, **k):
        registry = cls._instances.setdefault(cls._registry_name(), dict())
        key = cls._key(*p, **k)
        try:
            return registry[key]
        except KeyError:
            ret = registry[key] = super(KeyedInstance, cls).__new__(cls)
            return ret

    @classmethod
    def _registry_name(cls):
        return '%s.%s' % (cls.__module__, cls.__qualname__)

    @classmethod
    def _key(cls, *p, **k):
        """Map constructor arguments to a hashable key"""
        raise NotImplementedError()
