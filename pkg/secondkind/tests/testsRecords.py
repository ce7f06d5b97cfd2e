import envtest  # modifies path
from secondkind import *
import json
from fractions import Fraction


class TestValueFormat(envtest.SecondKindTestCase):
    def testIntegers(self):
        self.assertEqual(formatValue(11), "11")
        self.assertEqual(formatValue(-3), "-3")

    def testRationalsInLowestTerms(self):
        self.assertEqual(formatValue(Fraction(-2, 24)), "-1/12")
        self.assertEqual(formatValue(Fraction(3, -160)), "-3/160")
        self.assertEqual(formatValue(Fraction(6, 3)), "2")

    def testInvalid(self):
        self.assertRaises(TypeError, formatValue, 0.5)
        self.assertRaises(TypeError, formatValue, True)

    def testParse(self):
        self.assertEqual(parseValue("-1/12"), Fraction(-1, 12))
        self.assertEqual(parseValue(" 11 "), 11)
        self.assertEqual(parseValue("4/2"), 2)
        self.assertIsInstance(parseValue("4/2"), int)
        self.assertRaises(ValueError, parseValue, "x")


class TestOutputRecord(envtest.SecondKindTestCase):
    def testFromValue(self):
        record = OutputRecord.fromValue('bernoulli2', [2], Fraction(-1, 12), method='series')
        self.assertEqual(record.indices, (2,))
        self.assertEqual(record.value, "-1/12")
        self.assertEqual(record.status, 'ok')
        self.assertEqual(record.exactValue, Fraction(-1, 12))

    def testInvalidKindOrStatus(self):
        self.assertRaises(ValueError, OutputRecord, 'euler', (1,), "1")
        self.assertRaises(ValueError, OutputRecord, 'coeff', (1, 2), "1", 'unknown')

    def testString(self):
        record = OutputRecord.fromValue('bernoulli2', (5,), Fraction(3, 160), method='stirling')
        self.assertEqual(str(record), "bernoulli2(5) [stirling] = 3/160 ok")
        self.assertEqual(str(OutputRecord('stirling', (4, 2), "11")), "stirling(4,2) = 11 ok")

    def testDictionaries(self):
        record = OutputRecord('coeff', (4, 3), "22")
        self.assertEqual(record.asDict(), {'kind': 'coeff', 'indices': [4, 3], 'value': '22', 'status': 'ok'})
        self.assertEqual(OutputRecord.fromDict(record.asDict()), record)


class TestRenderRecords(envtest.SecondKindTestCase):
    def setUp(self):
        self.records = [OutputRecord.fromValue('bernoulli2', (4,), Fraction(-19, 720), method=method)
                        for method in ('coefficients', 'stirling')]

    def testPlain(self):
        self.assertEqual(renderRecords(self.records),
                         "bernoulli2(4) [coefficients] = -19/720 ok\nbernoulli2(4) [stirling] = -19/720 ok\n")

    def testCsv(self):
        lines = renderRecords(self.records, 'csv').splitlines()
        self.assertEqual(lines[0], "kind,indices,method,value,status")
        self.assertEqual(lines[1], "bernoulli2,4,coefficients,-19/720,ok")

    def testJsonRoundTrip(self):
        text = renderRecords(self.records, 'json')
        self.assertEqual(parseJsonRecords(text), self.records)
        self.assertEqual(renderRecords(parseJsonRecords(text), 'json'), text)
        self.assertEqual(json.loads(text)[0]['value'], "-19/720")

    def testDeterministic(self):
        self.assertEqual(renderRecords(self.records, 'json'), renderRecords(list(self.records), 'json'))

    def testUnknownFormat(self):
        self.assertRaises(ValueError, renderRecords, self.records, 'xml')


if __name__ == '__main__':
    envtest.main()
