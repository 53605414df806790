"""Rediscover the bundled monads and rewrite ``src/pisimp/fixtures``.

The output should be identical to what is checked in; ``git diff`` after
running this is a quick sanity check of the enumerator.
"""

from pisimp import bundled

for path in bundled.write_fixtures():
    print(path)
