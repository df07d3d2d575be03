"""Row-factorization matrices and RF-relations of almost arithmetic numerical semigroups."""
