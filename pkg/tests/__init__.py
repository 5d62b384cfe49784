# quartic-basis test suite
