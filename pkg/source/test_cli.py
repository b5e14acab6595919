#   pyQuiver Command Line Tests

#---- IMPORTS ----
import os
import shutil
import tempfile
import unittest
from pyquiver import cli
from pyquiver.test_quivers import A2_TEXT


class cliTests(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.quiverPath = self.writeFile("a2.quiver", A2_TEXT)
        self.outputPath = os.path.join(self.directory, "result.txt")

    def tearDown(self):
        shutil.rmtree(self.directory)

    def writeFile(self, name, text):
        path = os.path.join(self.directory, name)
        with open(path, 'w', encoding = 'utf-8') as fileObject:
            fileObject.write(text)
        return path

    def runCommand(self, *argv):
        return cli.main(['--output', self.outputPath] + list(argv))

    def output(self):
        with open(self.outputPath, encoding = 'utf-8') as fileObject:
            return fileObject.read()

    def test_checkQuiver(self):
        self.assertEqual(self.runCommand('check-quiver', self.quiverPath), cli.EXIT_SUCCESS)
        text = self.output()
        self.assertIn("edge a kind=+", text)
        self.assertIn("acyclic: yes", text)
        self.assertIn("stability tau: self-dual", text)

    def test_badSignRejected(self):
        path = self.writeFile("bad.quiver", A2_TEXT.replace("edge a 1 2 dual=a v=+1", "edge a 1 2 dual=b v=+1\nedge b 1 2 dual=a v=-1"))
        self.assertEqual(cli.main(['check-quiver', path]), cli.EXIT_INVALID)

    def test_missingFile(self):
        self.assertEqual(cli.main(['check-quiver', os.path.join(self.directory, "absent.quiver")]), cli.EXIT_INVALID)

    def test_invariant(self):
        self.assertEqual(self.runCommand('invariant', self.quiverPath, '--stability', 'tau', '--theta', '1=1,2=1'), cli.EXIT_SUCCESS)
        self.assertEqual(self.output(), "1/2\ndegree 0\n")
        self.assertEqual(self.runCommand('invariant', self.quiverPath, '--stability', 'mu', '--theta', '1=1,2=1'), cli.EXIT_SUCCESS)
        self.assertEqual(self.output(), "0\ndegree 0\n")

    def test_unknownStability(self):
        self.assertEqual(cli.main(['invariant', self.quiverPath, '--theta', '1=1,2=1']), cli.EXIT_INVALID)

    def test_nonPositiveBound(self):
        self.assertEqual(cli.main(['wallcross', self.quiverPath, '--stability', 'tau', '--bound', '0']), cli.EXIT_INVALID)

    def test_wallcrossVerify(self):
        self.assertEqual(self.runCommand('wallcross-verify', self.quiverPath, '--stability', 'tau'), cli.EXIT_SUCCESS)
        self.assertIn("stability invariance: zero", self.output())

    def test_tame(self):
        self.assertEqual(self.runCommand('tame', self.quiverPath, '--stability', 'tau', '--theta', '1=1,2=1'), cli.EXIT_SUCCESS)
        self.assertTrue(self.output().startswith("TAME_CERTIFIED"))


if __name__ == '__main__':
    unittest.main()
