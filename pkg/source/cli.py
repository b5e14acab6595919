#   pyQuiver Command Line Module

"""Command-line front end.

Every command reads a quiver file, runs one library operation and prints canonical text. Exit codes:
0 success, 1 validation failure, 2 identity or residual failure, 3 resource bound exceeded.
"""

#---- IMPORTS ----
import sys
import argparse
from pyquiver import config
from pyquiver import errors
from pyquiver import quivers
from pyquiver import utilities
from pyquiver import vertex
from pyquiver import twisted
from pyquiver import representations
from pyquiver import wallcrossing
from pyquiver.lie import lieAlgebra
from pyquiver.polynomials import parsePoly

EXIT_SUCCESS = 0
EXIT_INVALID = 1
EXIT_IDENTITY = 2
EXIT_RESOURCE = 3


#---- HELPERS ----
class runConfig(object):
    """The parsed command line, with the quiver loaded."""
    def __init__(self, arguments):
        self._name_ = "pyquiver " + arguments.command
        self.arguments = arguments
        self.quiver, self.stabilities = quivers.parseQuiverFile(arguments.file)
        for name in ('bound', 'cap', 'trials', 'zmax'):
            value = getattr(arguments, name, None)
            if value is not None and value <= 0:
                raise errors.QuiverError("--" + name + " must be positive.")

    def stability(self):
        name = self.arguments.stability
        if name not in self.stabilities:
            raise errors.QuiverError("No stability named '" + name + "' in " + self.arguments.file + ".")
        return self.stabilities[name]

    def vector(self, spec):
        return self.quiver.vector(utilities.parseClassSpec(spec, self.quiver.vertexNames))

    def poly(self, text, label = None):
        return parsePoly(text, self.quiver.vertexNames, label)

    def ordinaryElement(self, classSpec, polyText):
        alpha = self.vector(classSpec)
        return vertex.vaElement(alpha, self.poly(polyText, alpha))

    def moduleElement(self, module, classSpec, polyText):
        theta = self.quiver.sdClass(self.vector(classSpec))
        return module.element(theta, self.poly(polyText, theta))


def emit(arguments, text):
    """Writes the result to --output, or to the terminal."""
    if getattr(arguments, 'output', None):
        with open(arguments.output, 'w', encoding = 'utf-8') as fileObject:
            fileObject.write(text + "\n")
    else:
        utilities.printToTerminal(text)


#---- COMMANDS ----
def checkQuiver(run):
    target = run.quiver
    lines = ["quiver " + utilities.objectIdentifier(target) + ": valid"]
    for index, name in enumerate(target.vertexNames):
        lines.append("vertex " + name + " dual=" + target.vertexNames[target.dualVertex[index]] + " kind=" + target.vertexKind[index])
    for index, name in enumerate(target.edgeNames):
        lines.append("edge " + name + " kind=" + target.edgeKind[index])
    lines.append("acyclic: " + ("yes" if target.isAcyclic() else "no"))
    for label, tau in run.stabilities.items():
        lines.append("stability " + label + ": " + ("self-dual" if tau.isSelfDual(target) else "not self-dual")
                     + (", increasing" if tau.isIncreasing(target) else ""))
    return "\n".join(lines), EXIT_SUCCESS

def invariant(run):
    target = run.quiver
    theta = target.sdClass(run.vector(run.arguments.theta))
    bound = run.arguments.bound or theta.total()
    table = wallcrossing.wallCrossing(target, "wallcross").solveInvariants(run.stability(), bound)
    value = table.sdInvariant(theta)
    return value.poly.toText(target.vertexNames) + "\ndegree " + str(-target.chiRing(theta)), EXIT_SUCCESS

def axioms(run):
    arguments = run.arguments
    check = twisted.checkTwistedAxioms if arguments.sd else vertex.checkAxioms
    report = check(run.quiver, arguments.cap, arguments.trials, arguments.seed, arguments.zmax)
    return report.toText(), EXIT_SUCCESS if report.passed() else EXIT_IDENTITY

def vertexOp(run):
    arguments = run.arguments
    target = run.quiver
    first = run.ordinaryElement(arguments.first, arguments.first_poly)
    if arguments.sd:
        module = twisted.twistedModule(target)
        series = module.Ysd(first, run.moduleElement(module, arguments.second, arguments.second_poly), arguments.zmax)
    else:
        series = vertex.vertexAlgebra(target).Y(first, run.ordinaryElement(arguments.second, arguments.second_poly), arguments.zmax)
    return series.toText(target.vertexNames), EXIT_SUCCESS

def bracket(run):
    arguments = run.arguments
    lie = lieAlgebra(run.quiver)
    first = run.ordinaryElement(arguments.first, arguments.first_poly)
    second = run.ordinaryElement(arguments.second, arguments.second_poly)
    value = lie.bracket(lie.projectElement(first), lie.projectElement(second))
    return repr(value.alpha) + ": " + value.poly.toText(run.quiver.vertexNames), EXIT_SUCCESS

def heart(run):
    arguments = run.arguments
    lie = lieAlgebra(run.quiver)
    item = lie.projectElement(run.ordinaryElement(arguments.first, arguments.first_poly))
    value = lie.heart(item, run.moduleElement(lie.module, arguments.theta, arguments.module_poly))
    return repr(value.theta) + ": " + value.poly.toText(run.quiver.vertexNames), EXIT_SUCCESS

def tame(run):
    verdict = representations.tameCheck(run.quiver, run.stability(), run.vector(run.arguments.theta))
    return verdict.toText(), EXIT_SUCCESS

def wallcross(run):
    engine = wallcrossing.wallCrossing(run.quiver, "wallcross")
    table = engine.solveInvariants(run.stability(), run.arguments.bound)
    report = wallcrossing.residualText(engine.ordinaryIdentityResidual(table), engine.ksResidualReport(table))
    return table.toText() + "\n" + report, EXIT_SUCCESS if "nonzero" not in report else EXIT_IDENTITY

def wallcrossVerify(run):
    """Solves through two increasing stability functions and reports every residual plus their agreement."""
    target = run.quiver
    engine = wallcrossing.wallCrossing(target, "wallcross")
    tau, bound = run.stability(), run.arguments.bound
    table = engine.solveInvariants(tau, bound)
    other = engine.solveInvariants(tau, bound, target.makeIncreasingSd(run.arguments.seed))
    lines = [wallcrossing.residualText(engine.ordinaryIdentityResidual(table), engine.ksResidualReport(table))]
    ordinary, sd = table.sameAs(other)
    lines.append("stability invariance: " + ("zero" if not ordinary and not sd else "nonzero"))
    text = "\n".join(lines)
    return text, EXIT_SUCCESS if "nonzero" not in text else EXIT_IDENTITY

COMMANDS = {'check-quiver': checkQuiver, 'invariant': invariant, 'axioms': axioms, 'vertex-op': vertexOp,
            'bracket': bracket, 'heart': heart, 'tame': tame, 'wallcross': wallcross, 'wallcross-verify': wallcrossVerify}


#---- PARSER ----
def buildParser():
    parser = argparse.ArgumentParser(prog = 'pyquiver', description = "Vertex algebras, twisted modules and wall-crossing for self-dual quivers.")
    parser.add_argument('--verbose', action = 'store_true', help = "print debug notices")
    parser.add_argument('--debug-channel', action = 'append', default = [], help = "debug channel to enable (repeatable; default all)")
    parser.add_argument('--output', help = "write the result to this file instead of the terminal")
    commands = parser.add_subparsers(dest = 'command', required = True)

    def command(name, helpText):
        subparser = commands.add_parser(name, help = helpText)
        subparser.add_argument('file', help = "quiver file")
        return subparser

    command('check-quiver', "validate a quiver file")
    subparser = command('invariant', "print inv^sd_theta(tau) and its degree")
    subparser.add_argument('--stability', default = 'default', help = "stability label in the quiver file")
    subparser.add_argument('--theta', required = True, help = "self-dual class, e.g. '1=1,2=1'")
    subparser.add_argument('--bound', type = int, help = "largest self-dual total to solve (default |theta|)")
    subparser = command('axioms', "check the vertex algebra (or twisted module) axioms")
    subparser.add_argument('--sd', action = 'store_true', help = "check the twisted module")
    subparser.add_argument('--cap', type = int, default = config.degreeCap(), help = "homological degree cap")
    subparser.add_argument('--trials', type = int, default = 25)
    subparser.add_argument('--seed', type = int, default = config.defaultSeed())
    subparser.add_argument('--zmax', type = int, default = config.axiomZmax(), help = "series truncation; full verification runs use 24")
    for name, helpText in (('vertex-op', "print Y(A,z)B, or Y^sd(A,z)M with --sd"), ('bracket', "print [A,B] in L")):
        subparser = command(name, helpText)
        subparser.add_argument('--first', required = True, help = "class of A")
        subparser.add_argument('--first-poly', default = "1", help = "polynomial of A")
        subparser.add_argument('--second', required = True, help = "class of B (or of M with --sd)")
        subparser.add_argument('--second-poly', default = "1", help = "polynomial of B (or M)")
        if name == 'vertex-op':
            subparser.add_argument('--sd', action = 'store_true')
            subparser.add_argument('--zmax', type = int, default = config.defaultZmax())
    subparser = command('heart', "print A heart M")
    subparser.add_argument('--first', required = True, help = "class of A")
    subparser.add_argument('--first-poly', default = "1")
    subparser.add_argument('--theta', required = True, help = "self-dual class of M")
    subparser.add_argument('--module-poly', default = "1")
    subparser = command('tame', "decide whether theta is tame")
    subparser.add_argument('--stability', default = 'default')
    subparser.add_argument('--theta', required = True)
    for name, helpText in (('wallcross', "print the invariant table and its residual report"),
                           ('wallcross-verify', "print residuals and the stability-invariance check")):
        subparser = command(name, helpText)
        subparser.add_argument('--stability', default = 'default')
        subparser.add_argument('--bound', type = int, default = 2, help = "largest self-dual total; full verification runs use 6")
        if name == 'wallcross-verify':
            subparser.add_argument('--seed', type = int, default = 1, help = "seed of the second increasing stability")
    return parser


def main(argv = None):
    """Runs one command. Returns the exit code."""
    arguments = buildParser().parse_args(argv)
    if arguments.verbose:
        config.verboseDebugOn()
        config.setDebugChannels(*arguments.debug_channel)
    try:
        run = runConfig(arguments)
        text, code = COMMANDS[arguments.command](run)
    except (errors.ResidualNonzero, errors.AxiomViolation) as error:
        utilities.notice("pyquiver", "identity failed: " + str(error))
        return EXIT_IDENTITY
    except (errors.TruncationTooSmall, errors.Unbounded) as error:
        utilities.notice("pyquiver", "resource bound exceeded: " + str(error))
        return EXIT_RESOURCE
    except (errors.Error, OSError) as error:
        utilities.notice("pyquiver", "invalid input: " + str(error))
        return EXIT_INVALID
    emit(arguments, text)
    return code


if __name__ == '__main__':
    sys.exit(main())
