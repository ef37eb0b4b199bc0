#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The hybridqc command-line tool."""

import sys
import inspect
import logging
from optparse import OptionParser, BadOptionError

from hybridqc import exceptions
from hybridqc.experiment import api
from hybridqc.experiment.config import *
from hybridqc.util import asbool


log = logging.getLogger(__name__)

alias = dict(
    diag=api.diagnose,
    sim=api.simulate,
)

def alias_setup():
    for key, val in alias.items():
        setattr(api, key, val)
alias_setup()

HELP_COMMANDS = ('help', '-h', '--help')

# failures reported by exit status rather than by the usage message
EXIT_CODES = (
    (exceptions.NumericalFailureError, EXIT_NUMERICAL, 'Numerical failure'),
    (exceptions.ResourceLimitError, EXIT_RESOURCE, 'Resource limit'),
)


class PassiveOptionParser(OptionParser):
    """Leaves ``--name=value`` options it does not know in the argument
    list, so every command parameter can be given that way. Negative
    numbers are arguments, not short options."""

    def _process_args(self, largs, rargs, values):
        while rargs:
            arg = rargs[0]
            if arg == '--':
                del rargs[0]
                return
            if arg.startswith('--'):
                try:
                    self._match_long_opt(arg.split('=', 1)[0])
                except BadOptionError:
                    largs.append(rargs.pop(0))
                else:
                    self._process_long_opt(rargs, values)
            elif arg.startswith('-') and len(arg) > 1 and not _is_number(arg):
                self._process_short_opts(rargs, values)
            elif self.allow_interspersed_args:
                largs.append(rargs.pop(0))
            else:
                return


def _is_number(arg):
    try:
        float(arg)
    except ValueError:
        return False
    return True


class SingleLevelFilter(logging.Filter):
    """Pass records with min <= level <= max"""

    def __init__(self, min=None, max=None):
        self.min = min or 0
        self.max = max or 100

    def filter(self, record):
        return self.min <= record.levelno <= self.max


def configure_logging(debug=False):
    """INFO and below to stdout, WARNING and above to stderr"""
    logger = logging.getLogger()
    for handler in list(logger.handlers):
        if getattr(handler, '_hybridqc', False):
            logger.removeHandler(handler)
    out = logging.StreamHandler(sys.stdout)
    out.addFilter(SingleLevelFilter(max=logging.INFO))
    err = logging.StreamHandler(sys.stderr)
    err.addFilter(SingleLevelFilter(min=logging.WARN))
    for handler in (out, err):
        handler._hybridqc = True
        logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if debug else logging.INFO)


def commands():
    return sorted(set(api.__all__) | set(alias))


def usage():
    listing = '\n\t'.join('%s - %s' % (name.ljust(12), api.command_desc.get(
        name, api.command_desc.get(getattr(api, name).__name__)))
        for name in commands())
    return """%%prog COMMAND ...

    Available commands:
        %s

    Enter "%%prog help COMMAND" for information on a particular command.
    """ % listing


def make_parser(usage):
    parser = PassiveOptionParser(usage=usage)
    parser.add_option("-d", "--debug", action="store_true", dest="debug",
                      help="Shortcut to turn on DEBUG mode for logging")
    parser.add_option("-q", "--disable_logging", action="store_true",
                      dest="disable_logging",
                      help="Use this option to disable logging configuration")
    return parser


def command_parser(func):
    """A parser with one ``--name`` option per parameter of `func`
    (flags for parameters defaulting to False).

    :returns: ``(parser, parameters)``
    """
    parser = make_parser(inspect.getdoc(func))
    params = [p for p in inspect.signature(func).parameters.values()
              if p.kind == p.POSITIONAL_OR_KEYWORD]
    for param in params:
        if param.default is False:
            parser.add_option('--%s' % param.name, dest=param.name,
                              action='store_true')
        else:
            parser.add_option('--%s' % param.name, dest=param.name,
                              action='store', type='string')
    return parser, params


def split_options(args):
    """Remove the ``--name[=value]`` items from `args`;
    :returns: them as a dict (bare flags are True)"""
    ret = dict()
    for arg in [a for a in args if a.startswith('--')]:
        args.remove(arg)
        name, sep, value = arg[2:].partition('=')
        ret[name] = value if sep else True
    return ret


def bind_arguments(parser, command, params, args, given):
    """Positional `args` fill the parameters that `given` leaves open, in
    signature order. Exits through ``parser.error`` on a count mismatch."""
    ret = dict(given)
    open_params = [p for p in params if p.name not in given]
    if len(args) > len(open_params):
        parser.error("Too many arguments for command %s: %s"
                     % (command, args[len(open_params)]))
    for param, arg in zip(open_params, args):
        ret[param.name] = arg
    missing = [p.name for p in open_params[len(args):]
               if p.default is p.empty]
    if missing:
        parser.error("Not enough arguments for command %s: %s not specified"
                     % (command, ', '.join(missing)))
    return ret


def run(parser, func, kwargs):
    """Call `func` and log what it returns; :returns: exit status"""
    try:
        ret = func(**kwargs)
    except (exceptions.UsageError, exceptions.KnownError) as e:
        parser.error(e.args[0])
    except exceptions.Error as e:
        for error, code, what in EXIT_CODES:
            if isinstance(e, error):
                log.error('%s: %s', what, e)
                return code
        raise
    if ret is not None:
        log.info(ret)
    return EXIT_OK


def main(argv=None, **kwargs):
    """Shell interface to :mod:`hybridqc.experiment.api`.

    kwargs are default options; ``--some_option`` on the command line
    overrides them.

    :param disable_logging: leave logging unconfigured
    :type disable_logging: bool
    :returns: exit status
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = make_parser(usage())
    if not argv:
        parser.print_help()
        return EXIT_OK

    command = argv.pop(0)
    show_help = command in HELP_COMMANDS
    if show_help:
        if not argv:
            parser.print_help()
            return EXIT_OK
        command = argv.pop(0)
    if command not in commands():
        parser.error("Invalid command %s" % command)

    func = getattr(api, command)
    parser, params = command_parser(func)
    if show_help:
        parser.print_help()
        return EXIT_OK

    options, args = parser.parse_args(argv)
    given = dict(kwargs)
    given.update(split_options(args))
    given.update((key, value) for key, value in vars(options).items()
                 if value is not None)

    # shell switches are not command arguments
    debug = asbool(given.pop('debug', False))
    if not asbool(given.pop('disable_logging', False)):
        configure_logging(debug)

    return run(parser, func, bind_arguments(parser, command, params, args,
                                            given))

if __name__ == "__main__":
    sys.exit(main())
