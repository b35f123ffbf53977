import setuptools

long_description = ''
with open("README.md", "r") as fh:
    long_description = fh.read()
assert long_description

setuptools.setup(
    name="hardy-devkit",
    version="0.1.0",
    description="Numerical lab for Hardy spaces of Dirichlet series.",
    keywords="dirichlet series hardy spaces harmonic analysis numerics",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.7',
    install_requires=[
        "numpy>=1.17",
        "scipy>=1.6",
        "pytest>=5.4.2",
        "voluptuous>=0.11.7",
    ],
    entry_points={
        'console_scripts': ['hardy-devkit=hardy_devkit.cli:main'],
    },
    packages=setuptools.find_packages(exclude=['tests', 'examples', 'examples.*']),
)
