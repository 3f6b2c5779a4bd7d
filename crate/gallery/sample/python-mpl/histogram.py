import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
fig, ax = plt.subplots()
ax.hist(cars["mpg"], bins=20)
ax.set_xlabel("mpg")
ax.set_ylabel("count")
plt.show()
