import unittest
from pyaivat.exceptions import DataCorruptionException
from pyaivat.utilities import format_probability, format_sample
from pyaivat.utilities import parse_pairs, sample_index, uniform
from pyaivat.utilities import weighted_mean


class SimpleUtilityTest(unittest.TestCase):
    """
    This is the unittest for the pyaivat.utilities module
    """

    def setUp(self):
        """ Initializes the test environment """
        self.probabilities = [0.25, 0.0, 0.5, 0.25]

    def tearDown(self):
        """ Cleans up the test environment """
        del self.probabilities

    def test_formatting(self):
        """ Test numbers are written to parse back """
        self.assertEqual(float(format_probability(1.0 / 3)), 1.0 / 3)
        self.assertEqual(format_probability(1), '1.0')
        self.assertEqual(format_sample(1.0 / 3), '0.333333333333')
        self.assertEqual(format_sample(2.0), '2')
        self.assertEqual(format_sample(1.0 / 3, 3), '0.333')

    def test_parse_pairs(self):
        """ Test action entries keep their order """
        pairs = parse_pairs(['k:0.75', 'r:0.25'])
        self.assertEqual(list(pairs.items()), [('k', 0.75), ('r', 0.25)])
        self.assertEqual(parse_pairs(['x1:2']), {'x1': 2.0})
        for token in ('k0.75', ':0.5', 'k:abc'):
            self.assertRaises(DataCorruptionException, parse_pairs, [token])

    def test_weighted_mean(self):
        """ Test weighted means and their zero denominators """
        self.assertAlmostEqual(
            weighted_mean([1.0, 3.0], [4.0, 8.0]), 7.0, places=12)
        self.assertEqual(weighted_mean([1e-7], [0.1]), 0.1)
        self.assertRaises(DataCorruptionException,
                          weighted_mean, [0.0, 0.0], [1.0, 2.0])

    def test_sample_index(self):
        """ Test inverse CDF sampling skips zero entries """
        self.assertEqual(sample_index(self.probabilities, 0.0), 0)
        self.assertEqual(sample_index(self.probabilities, 0.24), 0)
        self.assertEqual(sample_index(self.probabilities, 0.25), 2)
        self.assertEqual(sample_index(self.probabilities, 0.8), 3)
        self.assertEqual(sample_index([0.5, 0.5, 0.0], 0.9999999999), 1)
        self.assertRaises(DataCorruptionException,
                          sample_index, [0.0, 0.0], 0.5)

    def test_uniform(self):
        """ Test the uniform distribution """
        self.assertEqual(uniform('kr'), {'k': 0.5, 'r': 0.5})
        self.assertEqual(sum(uniform(['f', 'c', 'r']).values()),
                         3 * (1.0 / 3))

#---------------------------------------------------------------------------#
# Main
#---------------------------------------------------------------------------#
if __name__ == "__main__":
    unittest.main()
