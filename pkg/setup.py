import setuptools

with open('README.md', 'r') as f:
    long_description = f.read()

setuptools.setup(
    name='well-pressure',
    version='0.1.0',
    description=(
        'Bound-state energies, pressure response and ionization threshold of '
        'a particle in a one-dimensional finite potential well.'
    ),
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=setuptools.find_packages(),
    package_data={'well_pressure': ['config/*.json']},
    license='BSD 3-Clause License',
    python_requires='>=3.8',
    install_requires=[
        'numpy',
        'scipy'
    ],
    extras_require={
        'tests': ['pytest']
    },
    entry_points={
        'console_scripts': ['well-pressure=well_pressure.cli:run']
    },
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Development Status :: 3 - Alpha',
        'Topic :: Scientific/Engineering :: Physics'
    ]
)
