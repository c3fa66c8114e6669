import unittest
from pyaivat.exceptions import *


class SimpleExceptionsTest(unittest.TestCase):
    """
    This is the unittest for the pyaivat.exceptions module
    """

    def setUp(self):
        """ Initializes the test environment """
        self.exceptions = [
            AivatException("bad base"),
            ParameterException("bad parameter"),
            UsageException("bad action"),
            DataCorruptionException("bad log"),
            MissingInfosetException("1|Js||"),
            MissingValueException("c|", "JsQs"),
            OracleFailureException("biased"),
        ]

    def tearDown(self):
        """ Cleans up the test environment """
        pass

    def test_exceptions(self):
        """ Test all module exceptions """
        for ex in self.exceptions:
            try:
                raise ex
            except AivatException as ex:
                self.assertTrue("AIVAT Error:" in str(ex))
            else:
                self.fail("Excepted an AivatException")

    def test_missing_entries(self):
        """ Test missing entries are data corruption """
        ex = MissingValueException("c|", "JsQs")
        self.assertTrue(isinstance(ex, DataCorruptionException))
        self.assertEqual(ex.key, "c|")
        self.assertEqual(ex.action, "JsQs")
        self.assertTrue("action JsQs" in str(ex))
        ex = MissingInfosetException("1|Js||")
        self.assertTrue("[Data Corruption]" in str(ex))
        self.assertFalse("action" in str(MissingValueException("c|")))

#---------------------------------------------------------------------------#
# Main
#---------------------------------------------------------------------------#
if __name__ == "__main__":
    unittest.main()
