import os
from setuptools import setup, find_packages

# package description and keywords
description = ('Python-based tools for verifying alternating-sign Hölder, '
    'Cauchy and Minkowski type inequalities')
keywords = ('alternating series, reverse Hölder inequality, '
    'reverse Minkowski inequality, sharp constants, pattern search')
# get long_description from README.rst
with open("README.rst", mode="r", encoding="utf8") as fh:
    long_description = fh.read()
long_description_content_type = "text/x-rst"

# get version
with open('version.txt', mode="r", encoding="utf8") as fh:
    version = fh.read().strip()

# get install requirements
with open('requirements.txt', mode="r", encoding="utf8") as fh:
    install_requires = [line.split().pop(0) for line in fh.read().splitlines()
        if line and not line.startswith('#')]

# list of all scripts to be included with package
scripts = [os.path.join('inequality_toolkit','altineq.py')]

setup(
    name='inequality-toolkit',
    version=version,
    description=description,
    long_description=long_description,
    long_description_content_type=long_description_content_type,
    license='MIT',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
    ],
    keywords=keywords,
    python_requires='>=3.9',
    packages=find_packages(exclude=['test']),
    install_requires=install_requires,
    extras_require={'dev': ['pytest', 'hypothesis', 'scipy']},
    scripts=scripts,
    entry_points={
        'console_scripts': ['altineq=inequality_toolkit.altineq:main'],
    },
    package_data={'inequality_toolkit': ['data/altineqrc']},
    include_package_data=True,
)
