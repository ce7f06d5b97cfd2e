import envtest  # modifies path
from secondkind import *
import math
import warnings
from fractions import Fraction

# Published values of a(n,i), i = 2..n+1 (row 11 stops at i=11)
publishedRows = {
    1: (1,),
    2: (1, 2),
    3: (2, 6, 6),
    4: (6, 22, 36, 24),
    5: (24, 100, 210, 240, 120),
    6: (120, 548, 1350, 2040, 1800, 720),
    7: (720, 3528, 9744, 17640, 21000, 15120, 5040),
    8: (5040, 26136, 78792, 162456, 235200, 231840, 141120, 40320),
    9: (40320, 219168, 708744, 1614816, 2693880, 3265920, 2751840, 1451520, 362880),
    10: (362880, 2053152, 7036200, 17368320, 32319000, 45556560, 47628000, 35078400, 16329600, 3628800),
    11: (3628800, 21257280, 76521456, 201828000, 410031600, 649479600, 795175920, 731808000, 479001600,
         199584000),
}


class TestCoeffTable(envtest.SecondKindTestCase):
    def setUp(self):
        self.table = CoeffTable(nMax=11)

    def testPublishedTable(self):
        for n, published in publishedRows.items():
            self.assertEqual(self.table.row(n)[:len(published)], published, msg="row {0}".format(n))

    def testSelectedEntries(self):
        self.assertEqual(self.table.value(1, 2), 1)
        self.assertEqual(self.table.value(4, 3), 22)
        self.assertEqual(self.table.value(5, 4), 210)
        self.assertEqual(self.table.value(10, 3), 2053152)
        self.assertEqual(self.table.value(9, 7), 3265920)
        self.assertEqual(self.table[11, 10], 479001600)
        self.assertEqual(self.table[11, 12], math.factorial(11))

    def testBoundaries(self):
        for n in range(1, 12):
            self.assertEqual(self.table.value(n, 2), math.factorial(n - 1))
            self.assertEqual(self.table.value(n, n + 1), math.factorial(n))

    def testOutsideRowIsZero(self):
        self.assertEqual(self.table.value(3, 5), 0)
        self.assertEqual(self.table.value(3, 1), 0)

    def testRowOutOfRange(self):
        self.assertRaises(ValueError, self.table.value, 0, 2)
        self.assertRaises(ValueError, self.table.row, 12)

    def testIsConsistent(self):
        self.assertTrue(CoeffTable(30).isConsistent())

    def testInvalidSize(self):
        self.assertRaises(ValueError, CoeffTable, 0)
        self.assertRaises(TypeError, CoeffTable, "5")

    def testLength(self):
        self.assertEqual(len(self.table), 11)

    def testString(self):
        self.assertIn("5: 24 100 210 240 120", str(self.table))


class TestCoefficientRoutes(envtest.SecondKindTestCase):
    def testFromStirling(self):
        self.assertEqual(coefficientFromStirling(4, 3), 22)
        self.assertEqual(coefficientFromStirling(5, 4), 210)
        for n in range(1, 10):
            self.assertEqual(coefficientFromStirling(n, 2), math.factorial(n - 1))

    def testFromStirlingMatchesTable(self):
        table = CoeffTable(60)
        triangle = StirlingTriangle(60)
        for n in range(1, 61):
            for i in range(2, n + 2):
                self.assertEqual(coefficientFromStirling(n, i, triangle), table.value(n, i))

    def testStirlingSignsMakeCoefficientsPositive(self):
        triangle = StirlingTriangle(20)
        for n in range(1, 21):
            for i in range(2, n + 2):
                self.assertEqual((-1) ** (n + i - 1) * triangle.value(n, i - 1) > 0, True)

    def testFromNested(self):
        self.assertEqual(coefficientFromNested(4, 3), 22)
        self.assertEqual(coefficientFromNested(5, 4), 210)

    def testFromNestedMatchesTable(self):
        table = CoeffTable(30)
        for n in range(1, 31):
            for i in range(2, n + 2):
                self.assertEqual(coefficientFromNested(n, i), table.value(n, i))

    def testHarmonicClosedForm(self):
        self.assertEqual(harmonicClosedForm(2), 2)
        self.assertEqual(harmonicClosedForm(4), 22)
        self.assertEqual(harmonicClosedForm(10), 2053152)
        self.assertRaises(ValueError, harmonicClosedForm, 1)

    def testOutOfRange(self):
        self.assertRaises(ValueError, coefficientFromStirling, 3, 1)
        self.assertRaises(ValueError, coefficientFromStirling, 3, 5)
        self.assertRaises(ValueError, coefficientFromNested, 0, 2)


class TestReciprocalFactorial(envtest.SecondKindTestCase):
    def testSmallValues(self):
        self.assertEqual(reciprocalFactorial(1), 1)
        self.assertEqual(reciprocalFactorial(2), Fraction(1, 2))
        self.assertEqual(reciprocalFactorial(4), Fraction(1, 24))

    def testFactorialIdentity(self):
        for n in range(1, 21):
            self.assertEqual(reciprocalFactorial(n) * math.factorial(n), 1)

    def testInvalid(self):
        self.assertRaises(ValueError, reciprocalFactorial, 0)


class TestConjecture(envtest.SecondKindTestCase):
    def testUnimodal(self):
        self.assertTrue(isUnimodal([24, 100, 210, 240, 120]))
        self.assertTrue(isUnimodal([2, 6, 6]))
        self.assertFalse(isUnimodal([2, 6, 6], strict=True))
        self.assertFalse(isUnimodal([3, 1, 2]))
        self.assertTrue(isUnimodal([]))
        self.assertTrue(isUnimodal([5]))

    def testNoViolationsOnPublishedRange(self):
        for nMax in (2, 6, 11):
            report = self.assertNoWarnings(conjectureCheck, nMax)
            self.assertFalse(report.hasViolations)
            self.assertEqual(report.nMax, nMax)

    def testNoViolationsUpTo40(self):
        report = conjectureCheck(40)
        self.assertEqual(report.monotonicityViolations, ())
        self.assertEqual(report.unimodalityViolations, ())

    def testStrictViolationsAreOnlyReported(self):
        report = conjectureCheck(6)
        self.assertIn(3, report.strictUnimodalityViolations)
        self.assertFalse(report.hasViolations)

    def testPeaks(self):
        report = conjectureCheck(5)
        self.assertEqual(len(report.peaks), 5)
        self.assertEqual(report.peaks[4], 5)

    def testViolationsWarn(self):
        # row 3 is nowhere larger than row 2
        class BrokenTable:
            nMax = 3
            rows = {1: (1,), 2: (5, 1), 3: (1, 1, 1)}

            def value(self, n, i):
                return self.rows[n][i - 2] if 2 <= i <= n + 1 else 0

            def row(self, n):
                return self.rows[n]

        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            report = conjectureCheck(3, table=BrokenTable())
        self.assertTrue(report.hasViolations)
        self.assertEqual(report.monotonicityViolations, ((2, 2), (2, 3)))
        self.assertEqual(len(caught), 1)

    def testInvalid(self):
        self.assertRaises(ValueError, conjectureCheck, 1)

    def testReportString(self):
        self.assertIn("monotonicity violations: 0", str(conjectureCheck(4)))


if __name__ == '__main__':
    envtest.main()
