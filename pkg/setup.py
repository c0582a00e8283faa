"""
Setup script for wavecrest
"""

from setuptools import setup, find_packages

with open('README.md', 'r', encoding='utf-8') as f:
    long_description = f.read()

with open('requirements.txt', 'r', encoding='utf-8') as f:
    requirements = [line.strip() for line in f if line.strip() and not line.startswith('#')]

# pytest, coverage and hypothesis are test-only
test_requirements = [r for r in requirements if r.split('>')[0] in ('pytest', 'coverage', 'hypothesis')]
runtime_requirements = [r for r in requirements if r not in test_requirements]

setup(
    name='wavecrest',
    version='1.0.0',
    description='Numerical laboratory for the central limit law of local energies of random waves',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(where='src'),
    package_dir={'': 'src'},
    package_data={'wavecrest': ['data/calibration.txt']},
    include_package_data=True,
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    python_requires='>=3.8',
    install_requires=runtime_requirements,
    extras_require={'test': test_requirements},
    entry_points={
        'console_scripts': [
            'wavecrest=wavecrest.cli.main:main',
        ],
    },
)
