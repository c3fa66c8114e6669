"""
Installs pyaivat using setuptools

Run:
    python setup.py install
to install the package from the source archive.

The quality extras run the test suite:
    python setup.py nosetests
"""


def main():
    # Common modules import
    import sys
    import os
    from pyaivat import __version__, __author__, __author_email__
    # Import command classes
    try:
        from setup_commands import command_classes
    except ImportError:
        command_classes = {}
    from setuptools import setup, find_packages
    # Check python version
    if sys.version_info < (3, 4, 0):
        sys.stderr.write('You need python 3.4 or later to run this script!' + os.linesep)
        exit(1)
    # Start installation
    setup(
        name='pyaivat',
        version=__version__,
        description='Low variance agent evaluation for extensive form games',
        long_description=open('README.rst').read(),
        keywords='aivat, poker, variance reduction, mccfr, evaluation',
        author=__author__,
        author_email=__author_email__,
        maintainer=__author__,
        maintainer_email=__author_email__,
        license='BSD',
        packages=find_packages(exclude=['examples', 'test']),
        exclude_package_data={'': ['examples', 'test', 'doc']},
        platforms=['Linux', 'Mac OS X', 'Win'],
        include_package_data=True,
        zip_safe=True,
        install_requires=[
            'numpy >= 1.17.0',
        ],
        extras_require={
            'quality': ['coverage >= 3.5.3', 'nose >= 1.2.1', 'mock >= 1.0.0', 'pep8 >= 1.3.3'],
            'documents': ['sphinx >= 1.1.3'],
        },
        entry_points={
            'console_scripts': ['pyaivat = pyaivat.cli:main'],
        },
        test_suite='nose.collector',
        cmdclass=command_classes,
        classifiers=[
            'Development Status :: 4 - Beta',
            'Environment :: Console',
            'Intended Audience :: Developers',
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: BSD License',
            'Natural Language :: English',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: Implementation :: CPython',
            'Programming Language :: Python',
            'Topic :: Games/Entertainment',
            'Topic :: Scientific/Engineering :: Mathematics',
            'Topic :: Software Development :: Libraries :: Python Modules',
        ],
    )


if __name__ == '__main__':
    main()
