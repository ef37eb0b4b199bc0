#!/usr/bin/env python
# -*- coding: utf-8 -*-
""".. currentmodule:: hybridqc.util"""

import logging
from decorator import decorator

from hybridqc import exceptions
from hybridqc.util.keyedinstance import KeyedInstance


log = logging.getLogger(__name__)

def asbool(obj):
    """Do everything to use object as bool"""
    if isinstance(obj, str):
        obj = obj.strip().lower()
        if obj in ['true', 'yes', 'on', 'y', 't', '1']:
            return True
        elif obj in ['false', 'no', 'off', 'n', 'f', '0']:
            return False
        else:
            raise ValueError("String is not true/false: %r" % obj)
    if obj in (True, False):
        return bool(obj)
    else:
        raise ValueError("String is not true/false: %r" % obj)

def aslist(obj, convert=None):
    """Split a comma separated string into a list, converting items.

    Lists and tuples are converted item by item; a scalar becomes a
    one-item list.
    """
    if isinstance(obj, str):
        items = [item.strip() for item in obj.split(',')]
        items = [item for item in items if item]
    elif isinstance(obj, (list, tuple)):
        items = list(obj)
    else:
        items = [obj]
    if convert is not None:
        items = [convert(item) for item in items]
    return items

def asrange(obj):
    """Parse integer lists that may contain ``lo..hi`` ranges"""
    ret = []
    for item in aslist(obj):
        if isinstance(item, str) and '..' in item:
            lo, hi = item.split('..', 1)
            ret.extend(range(int(lo), int(hi) + 1))
        else:
            ret.append(int(item))
    return ret

@decorator
def catch_known_errors(f, *a, **kw):
    """Decorator that catches known api errors"""

    try:
        return f(*a, **kw)
    except exceptions.PathFoundError as e:
        raise exceptions.KnownError("The path %s already exists" % e.args[0])
    except exceptions.PathNotFoundError as e:
        raise exceptions.KnownError("The path %s does not exist" % e.args[0])
    except (exceptions.InvalidInputError,
            exceptions.PreconditionError,
            exceptions.InsufficientDataError) as e:
        raise exceptions.KnownError(str(e))
