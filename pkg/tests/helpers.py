from collections import Counter

# number of generated cases per property suite, read by the acceptance run
CASES = Counter()
