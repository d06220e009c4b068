import os
from setuptools import setup, find_packages

readme = open(os.path.join(os.path.dirname(__file__), 'README.rst')).read()

requirements = [
    'numpy',
    'scipy',
    'sympy',
    'zcode',
]

setup(
    name = "rcprod",
    version = "0.3.0",
    description = ("Ray class groups of quadratic fields, small prime products in ray classes "
                   "and checks of the explicit bounds behind them."),
    license = "MIT",
    keywords = "number theory, ray class group, Selberg sieve, Hecke L-function",
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    install_requires=requirements,
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['rcprod = rcprod.cli:main']},
    long_description=readme,
    python_requires='>=3.8',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
      ],
  )
