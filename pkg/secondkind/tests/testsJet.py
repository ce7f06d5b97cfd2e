import envtest  # modifies path
from secondkind import *
import math


class TestJet(envtest.SecondKindTestCase):
    def testVariable(self):
        x = Jet.variable(2.0, order=3)
        self.assertEqual(list(x.coefficients), [2.0, 1.0, 0.0, 0.0])
        self.assertEqual(x.order, 3)
        self.assertEqual(x.value, 2.0)
        self.assertEqual(x.x0, 2.0)

    def testConstant(self):
        c = Jet.constant(5.0, order=2)
        self.assertEqual(list(c.coefficients), [5.0, 0.0, 0.0])

    def testEmptyJet(self):
        self.assertRaises(ValueError, Jet, [])

    def testSquare(self):
        x = Jet.variable(3.0, order=3)
        square = x * x
        self.assertEqual(square.value, 9.0)
        self.assertEqual(square.derivative(1), 6.0)
        self.assertEqual(square.derivative(2), 2.0)
        self.assertEqual(square.derivative(3), 0.0)

    def testScalarArithmetic(self):
        x = Jet.variable(1.0, order=2)
        self.assertEqual((x + 1).value, 2.0)
        self.assertEqual((1 + x).value, 2.0)
        self.assertEqual((1 - x).derivative(1), -1.0)
        self.assertEqual((x - 1).value, 0.0)
        self.assertEqual((2 * x).derivative(1), 2.0)
        self.assertEqual((x / 2).derivative(1), 0.5)
        self.assertEqual((-x).value, -1.0)

    def testReciprocal(self):
        x = Jet.variable(2.0, order=3)
        self.assertAlmostEqual((1 / x).derivative(3), -6 / 2 ** 4)
        self.assertAlmostEqual((x / x).value, 1.0)
        self.assertAlmostEqual((x / x).derivative(2), 0.0)

    def testReciprocalOfZero(self):
        self.assertRaises(ZeroDivisionError, Jet([0.0, 1.0]).reciprocal)

    def testPowers(self):
        x = Jet.variable(1.0, order=3)
        self.assertAlmostEqual((x ** 3).derivative(3), 6.0)
        self.assertAlmostEqual((x ** -2).derivative(1), -2.0)
        self.assertAlmostEqual((x ** 0).value, 1.0)
        self.assertRaises(TypeError, lambda: x ** 0.5)

    def testExp(self):
        x = Jet.variable(0.0, order=6)
        exponential = x.exp()
        for k in range(7):
            self.assertAlmostEqual(exponential.derivative(k), 1.0, places=12)

    def testLog(self):
        x = Jet.variable(1.0, order=4)
        logarithm = x.log()
        self.assertAlmostEqual(logarithm.value, 0.0)
        self.assertAlmostEqual(logarithm.derivative(1), 1.0)
        self.assertAlmostEqual(logarithm.derivative(4), -6.0)

    def testLogOfExp(self):
        x = Jet.variable(0.3, order=8)
        roundTrip = x.exp().log()
        for k in range(9):
            self.assertAlmostEqual(roundTrip.coefficients[k], x.coefficients[k], places=12)

    def testLogOfNonPositive(self):
        self.assertRaises(ValueError, Jet.variable(-1.0, 2).log)
        self.assertRaises(ValueError, Jet.variable(0.0, 2).log)

    def testOrderMismatch(self):
        self.assertRaises(ValueError, lambda: Jet.variable(1.0, 2) + Jet.variable(1.0, 3))
        self.assertRaises(ValueError, lambda: Jet.variable(1.0, 2) * Jet.variable(1.0, 3))

    def testInvalidOperand(self):
        x = Jet.variable(1.0, 2)
        self.assertRaises(TypeError, lambda: x + "a")
        self.assertRaises(TypeError, lambda: x * "a")
        self.assertRaises(TypeError, lambda: x / "a")

    def testDerivativeBeyondOrder(self):
        self.assertRaises(ValueError, Jet.variable(1.0, 2).derivative, 3)

    def testCoefficientsAreReadOnly(self):
        x = Jet.variable(1.0, 2)
        with self.assertRaises(ValueError):
            x.coefficients[0] = 3.0

    def testLogDerivativeSelfTest(self):
        for n in range(1, 11):
            for x in (0.5, 2.0, 10.0):
                self.assertRelativelyAlmostEqual(logDerivativeByJet(n, x), logDerivative(n, x), 1e-12)

    def testString(self):
        self.assertIn("Jet at x0=2.0", str(Jet.variable(2.0, 1)))


if __name__ == '__main__':
    envtest.main()
