#   pyQuiver Config Module

"""Session-wide defaults: degree caps, series truncations, the default seed and the debug switches.

Values live as module globals so every pyQuiver module reads the same setting.
"""


def setGlobalVariable(name, value):
    globals()[name] = value


def getGlobalVariable(name):
    """Returns the named setting, or None if it was never set."""
    return globals().get(name)

#degree cap
def setDegreeCap(cap):
    """Sets the default homological degree cap used by random element generators and axiom checks.

    cap -- a positive even integer. Generated polynomials never exceed this homological degree.
    """
    setGlobalVariable('degreeCapValue', int(cap))

def degreeCap():
    """Returns the default homological degree cap."""
    return getGlobalVariable('degreeCapValue')

def defaultZmax(cap = None):
    """Returns the default series truncation order for a given degree cap.

    cap -- the degree cap. If None, the global degree cap is used.

    Laurent series are exact for all exponents up to and including the returned order.
    """
    if cap is None:
        cap = degreeCap()
    return 2*cap + 4

def setAxiomZmax(zmax):
    """Sets the series truncation used by the axiom checkers when none is given."""
    setGlobalVariable('axiomZmaxValue', int(zmax))

def axiomZmax():
    return getGlobalVariable('axiomZmaxValue')

#kernel arity
def setKernelArityBound(bound):
    """Sets the largest number of vertex algebra inputs accepted by the multi-ary kernels."""
    setGlobalVariable('kernelArityBoundValue', int(bound))

def kernelArityBound():
    """Returns the largest number of inputs accepted by the multi-ary kernels."""
    return getGlobalVariable('kernelArityBoundValue')

#random seed
def setDefaultSeed(seed):
    """Sets the seed used by randomized checks when none is supplied."""
    setGlobalVariable('defaultSeedValue', seed)

def defaultSeed():
    return getGlobalVariable('defaultSeedValue')


#verbose debug
def verboseDebugOn():
    setGlobalVariable('verboseDebugFlag', True)

def verboseDebugOff():
    setGlobalVariable('verboseDebugFlag', False)

def verboseDebug():
    """True when utilities.debugNotice should print."""
    return getGlobalVariable('verboseDebugFlag')

def setDebugChannels(*channelNames):
    """Restricts debug output to the named channels. With no arguments every channel is enabled."""
    setGlobalVariable('verboseDebugChannels', channelNames)

def debugChannelEnabled(debugChannel):
    debugChannels = getGlobalVariable('verboseDebugChannels')
    return not debugChannels or debugChannel in debugChannels


#defaults
setDegreeCap(10)
setAxiomZmax(4)
setKernelArityBound(3)
setDefaultSeed(0)
verboseDebugOff()
setDebugChannels()
