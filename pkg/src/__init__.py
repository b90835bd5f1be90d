# arithperm - counting permutations under arithmetic constraints
