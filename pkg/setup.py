#!/usr/bin/env python
# vim: fdm=indent
'''
author:     Fabio Zanini
date:       08/08/17
content:    Setup script for sdsplit
'''
import sys

if ((sys.version_info[0] < 3) or
   (sys.version_info[0] == 3 and sys.version_info[1] < 7)):
    sys.stderr.write("Error in setup script for sdsplit:\n")
    sys.stderr.write("sdsplit supports Python 3.7+.")
    sys.exit(1)


from setuptools import setup, find_packages

requirements = [
    'PyYAML',
    'numpy>=1.17',
    'scipy',
    'pandas>=1.5',
    'matplotlib>=3.5',
    ]


# Get version
with open('sdsplit/_version.py') as fversion:
    version = fversion.readline().rstrip().split(' ')[-1]


# Setup function
setup(name='sdsplit',
      version=version,
      author='Fabio Zanini',
      author_email='fabio.zanini@stanford.edu',
      maintainer='Fabio Zanini',
      maintainer_email='fabio.zanini@stanford.edu',
      description="Split delivery vehicle routing by a priori demand splitting",
      long_description="""
      Split delivery vehicle routing by a priori demand splitting.

      Demands are split into co-located pieces with coin rules or adaptive
      ring-based prime-power rules, the resulting CVRP is solved with a
      savings + record-to-record travel heuristic, and the routes are
      projected back onto the original customers.""",
      license='GPL3',
      classifiers=[
         'Development Status :: 3 - Alpha',
         'Topic :: Scientific/Engineering :: Mathematics',
         'Intended Audience :: Developers',
         'Intended Audience :: Science/Research',
         'License :: OSI Approved :: GNU General Public License (GPL)',
         'Operating System :: POSIX',
         'Programming Language :: Python'
      ],
      packages=['sdsplit'] + ['sdsplit.' + s for s in find_packages(where='sdsplit')],
      package_data={'sdsplit': ['data/*.txt']},
      install_requires=requirements,
      extras_require={'test': ['pytest']},
      entry_points={
          'console_scripts': ['sdsplit = sdsplit.cli:main'],
          },
      )
