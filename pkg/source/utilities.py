#   pyQuiver Utilities Module

"""Terminal output, debug channels and the small parsers shared by the quiver file reader and the command line."""


#---- IMPORTS ----
import sys
import math
from fractions import Fraction
from pyquiver import config
from pyquiver import errors


def objectIdentifier(callingObject):
    """Returns the label used for an object in notices.

    Strings pass through. Quivers, engines and run configurations carry a _name_ attribute;
    anything else is shown by class name and id.
    """
    if isinstance(callingObject, str):
        return callingObject
    name = getattr(callingObject, '_name_', None)
    if name:
        return name
    return callingObject.__class__.__name__ + " @ " + hex(id(callingObject))


def notice(callingObject, noticeString):
    """Prints '[source] message' to the terminal."""
    printToTerminal("[" + objectIdentifier(callingObject) + "] " + str(noticeString))

def printToTerminal(text, newLine = True):
    if newLine:
        print(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()

def debugNotice(callingObject, channel, noticeString, padding = False, newLine = True):
    """Prints a notice when verbose debug is on and the channel is enabled.

    callingObject -- the object making the call, a plain string, or None for no prefix
    channel -- one of the channels below
    padding -- if true, a blank line is printed first
    newLine -- if false, the notice is written without a trailing newline

    Channels:
        parse -- quiver file parser
        lie -- basis construction and PBW rewriting
        wallcross -- invariant solver progress
        axioms -- individual axiom trials
        oracle -- representation enumeration

    Returns True if the notice was printed.
    """
    if not (config.verboseDebug() and config.debugChannelEnabled(channel)):
        return False
    if padding:
        printToTerminal("")
    if callingObject is None:
        printToTerminal(str(noticeString), newLine)
    else:
        printToTerminal("[" + objectIdentifier(callingObject) + "] " + str(noticeString), newLine)
    return True


def parseRational(text):
    """Parses an exact rational written as 'p' or 'p/q'.

    text -- the string to be parsed. Decimal points are rejected; pyQuiver never works with floats.

    Returns a Fraction.
    """
    text = text.strip()
    if '.' in text or 'e' in text.lower():
        raise ValueError("Not an exact rational: " + text)
    return Fraction(text)

def formatRational(value):
    """Formats a rational as 'p' or 'p/q' in lowest terms."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return str(value.numerator) + "/" + str(value.denominator)

def binomial(n, j):
    """Generalized binomial coefficient n choose j, for any integer n and j >= 0."""
    if j < 0:
        return 0
    if n >= 0:
        return math.comb(n, j)
    numerator = 1
    for step in range(j):
        numerator *= (n - step)
    return Fraction(numerator, math.factorial(j))

def parseClassSpec(text, vertexNames):
    """Parses a class specification of the form 'v1=2,v2=1' into a tuple of entries.

    text -- the specification string. Missing vertices get entry 0. A bare comma-separated
            list of integers (e.g. '1,1') is accepted as entries in declaration order.
    vertexNames -- ordered list of vertex names.
    """
    text = text.strip()
    if not text:
        return tuple(0 for name in vertexNames)
    fields = [field.strip() for field in text.split(',')]
    if all('=' not in field for field in fields):
        if len(fields) != len(vertexNames):
            raise errors.ParseError("class spec has " + str(len(fields)) + " entries but the quiver has " + str(len(vertexNames)) + " vertices")
        return tuple(int(field) for field in fields)
    entries = dict((name, 0) for name in vertexNames)
    for field in fields:
        if '=' not in field:
            raise errors.ParseError("malformed class entry '" + field + "'")
        name, value = field.split('=', 1)
        name = name.strip()
        if name not in entries:
            raise errors.ParseError("unknown vertex '" + name + "' in class spec")
        entries[name] = int(value)
    return tuple(entries[name] for name in vertexNames)
