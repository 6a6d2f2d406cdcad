# # Recovering pairing data from ridge cycles
#
# Only the ridge cycles of manifold 1011 are tabulated.  They fix which side
# each generator starts on and where it lands, and the requirement that the
# k-vector maps one centre to the other leaves four candidates per pairing.
# Testing each candidate against every tabulated transition narrows the
# field; the survivors are then checked as a whole.

from cell24.derive import derived_file_text, search

result = search()
print("\n".join(line for line in result.log if not line.startswith("reject")))
print()
print(derived_file_text(result))
