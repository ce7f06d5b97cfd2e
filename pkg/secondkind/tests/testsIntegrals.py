import envtest  # modifies path
from secondkind import *
import math


class TestRisingFactorialPoly(envtest.SecondKindTestCase):
    def testCoefficients(self):
        self.assertEqual(RisingFactorialPoly(0).coefficients, (1,))
        self.assertEqual(RisingFactorialPoly(1).coefficients, (0, 1))
        self.assertEqual(RisingFactorialPoly(3).coefficients, (0, 2, 3, 1))

    def testEvaluate(self):
        rising = RisingFactorialPoly(4)
        self.assertEqual(rising.degree, 4)
        self.assertEqual(rising(1), math.factorial(4))
        self.assertEqual(rising(2), 2 * 3 * 4 * 5)

    def testUnsignedStirling(self):
        triangle = StirlingTriangle(10)
        rising = RisingFactorialPoly(10, triangle)
        for j in range(11):
            self.assertEqual(rising.coefficients[j], (-1) ** (10 - j) * triangle.value(10, j))

    def testProduct(self):
        self.assertEqual(RisingFactorialPoly(2).times((0, 1)), (0, 0, 1, 1))


class TestFactorialStirlingIntegral(envtest.SecondKindTestCase):
    def testSmallSums(self):
        self.assertEqual(factorialStirlingSum(1, 1), 2)
        self.assertEqual(factorialStirlingSum(2, 1), 8)
        self.assertEqual(factorialStirlingSum(2, 3), 12)

    def testCollapseCase(self):
        for n in range(1, 8):
            self.assertEqual(factorialStirlingSum(n, n + 1), math.factorial(n) * math.factorial(n + 1))

    def testExactIntegral(self):
        self.assertEqual(risingFactorialIntegralExact(1, 1), 2)
        self.assertEqual(risingFactorialIntegralExact(2, 1), 8)
        self.assertEqual(risingFactorialIntegralExact(3, 2), factorialStirlingSum(3, 2))

    def testExactIdentity(self):
        triangle = StirlingTriangle(12)
        for n in range(1, 13):
            for k in range(1, n + 2):
                self.assertEqual(risingFactorialIntegralExact(n, k, triangle), factorialStirlingSum(n, k, triangle),
                                 msg="n={0}, k={1}".format(n, k))

    def testGaussLaguerre(self):
        self.assertAlmostEqual(risingFactorialIntegral(1, 1), 2.0, delta=1e-10)
        self.assertRelativelyAlmostEqual(risingFactorialIntegral(5, 3), risingFactorialIntegralExact(5, 3), 1e-10)
        for n in range(1, 9):
            for k in range(1, n + 2):
                self.assertRelativelyAlmostEqual(risingFactorialIntegral(n, k), risingFactorialIntegralExact(n, k),
                                                 1e-8)

    def testAdaptive(self):
        self.assertRelativelyAlmostEqual(risingFactorialIntegral(3, 2, method='adaptive'),
                                         risingFactorialIntegralExact(3, 2), 1e-8)

    def testUnknownMethod(self):
        self.assertRaises(ValueError, risingFactorialIntegral, 2, 1, None, 'simpson')

    def testDomain(self):
        self.assertRaises(ValueError, factorialStirlingSum, 0, 1)
        self.assertRaises(ValueError, factorialStirlingSum, 2, 0)
        self.assertRaises(ValueError, factorialStirlingSum, 2, 4)
        self.assertRaises(ValueError, risingFactorialIntegralExact, 3, 5)


class TestGammaStirling(envtest.SecondKindTestCase):
    def testPolynomialCheck(self):
        report = gammaStirlingPolynomialCheck(2)
        self.assertEqual(report.leftCoefficients, (0, 1, 2))
        self.assertEqual(report.rightCoefficients, (0, 1, 2))
        self.assertTrue(report.passed)

    def testPolynomialCheckUpTo15(self):
        for m in range(1, 16):
            report = gammaStirlingPolynomialCheck(m)
            self.assertTrue(report.passed)
            self.assertEqual(report.mismatches, ())
            self.assertEqual(len(report.leftCoefficients), m + 1)

    def testPolynomialCheckInvalid(self):
        self.assertRaises(ValueError, gammaStirlingPolynomialCheck, 0)

    def testFiniteT(self):
        for m in range(1, 7):
            for t in (0.5, 1.0, 3.0):
                self.assertRelativelyAlmostEqual(gammaStirlingIntegral(m, t), gammaStirlingSum(m, t), 1e-9)

    def testFiniteTInvalid(self):
        self.assertRaises(ValueError, gammaStirlingSum, 2, 0.0)
        self.assertRaises(ValueError, gammaStirlingIntegral, 2, -0.5)


class TestStieltjes(envtest.SecondKindTestCase):
    def testLeftSide(self):
        self.assertEqual(stieltjesLeftSide(1, 1), 2)
        self.assertEqual(stieltjesLeftSide(2, 1), 8)
        self.assertEqual(stieltjesLeftSide(2, 3), 12)

    def testRightSide(self):
        self.assertRelativelyAlmostEqual(stieltjesRightSide(1, 1), 2.0, 1e-6)
        self.assertRelativelyAlmostEqual(stieltjesRightSide(3, 2), stieltjesLeftSide(3, 2), 1e-6)
        self.assertRelativelyAlmostEqual(stieltjesRightSide(5, 6), stieltjesLeftSide(5, 6), 1e-5)

    def testAllCases(self):
        for m in range(1, 6):
            for k in range(1, m + 2):
                self.assertRelativelyAlmostEqual(stieltjesRightSide(m, k), stieltjesLeftSide(m, k), 1e-5,
                                                 msg="m={0}, k={1}".format(m, k))

    def testEvaluationParts(self):
        evaluation = evaluateStieltjesRightSide(2, 2)
        self.assertEqual((evaluation.m, evaluation.k), (2, 2))
        self.assertAlmostEqual(evaluation.value, 2 * (evaluation.boundaryTerm + evaluation.integral))
        self.assertLess(evaluation.truncationBound, 1e-10)

    def testWindowIndependence(self):
        narrow = evaluateStieltjesRightSide(2, 1, QuadratureConfig(vLo=-30, vHi=30))
        wide = evaluateStieltjesRightSide(2, 1, QuadratureConfig(vLo=-40, vHi=40))
        allowed = narrow.truncationBound + narrow.errorEstimate + wide.errorEstimate + 1e-9
        self.assertLess(abs(narrow.integral - wide.integral), allowed)

    def testNarrowWindowRaises(self):
        with self.assertRaises(TruncationError):
            evaluateStieltjesRightSide(1, 1, QuadratureConfig(vLo=-3, vHi=3))

    def testDomain(self):
        self.assertRaises(ValueError, stieltjesRightSide, 0, 1)
        self.assertRaises(ValueError, stieltjesRightSide, 2, 4)


class TestReciprocalLogIntegrals(envtest.SecondKindTestCase):
    def testExponentialIntegral(self):
        self.assertAlmostEqual(reciprocalLogIntegral(1.0), 1 / math.log(2), delta=1e-8)
        self.assertAlmostEqual(reciprocalLogIntegral(math.e - 1), 1.0, delta=1e-8)
        self.assertAlmostEqual(reciprocalLogIntegral(9.0), 1 / math.log(10), delta=1e-8)

    def testStieltjesRepresentation(self):
        for x in (0.5, 1.0, math.e - 1, 9.0):
            self.assertRelativelyAlmostEqual(reciprocalLogStieltjes(x), 1 / math.log1p(x), 1e-8)

    def testDomain(self):
        self.assertRaises(ValueError, reciprocalLogIntegral, 0.0)
        self.assertRaises(ValueError, reciprocalLogStieltjes, -0.5)


if __name__ == '__main__':
    envtest.main()
