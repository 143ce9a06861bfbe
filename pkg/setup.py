import os
from setuptools import setup

# from https://stackoverflow.com/a/9079062
import sys
if sys.version_info[0] < 3:
    raise Exception("wmcount only supports Python3. Did you run $python setup.py <option>.? "
                    "Try running $python3 setup.py <option>.")

this_directory = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(name='wmcount',
      version='0.1.0',
      description='wmcount counts weighted models of 2-CNF and 3-CNF formulas exactly by branch and reduce '
                  'followed by path decomposition dynamic programming.',
      long_description=long_description,
      long_description_content_type='text/markdown',
      license='LGPL-3.0',
      packages=['wmcount'],
      install_requires=['scipy', 'numpy>=1.17', 'networkx>=2.4'],
      extras_require={'mpi': ['mpi4py']},
      entry_points={'console_scripts': ['wmcount=wmcount.cli:run']},
      test_suite='tests',
      zip_safe=False)
