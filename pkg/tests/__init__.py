# This file makes the 'tests' directory a package.
